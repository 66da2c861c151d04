import numpy as np
import pytest

from orbitbell import (
    NonUnitInitialVector,
    canonical_solid,
    generate_orbit,
    gram,
    orbit_from_json,
    orbit_to_json,
    reflect_y,
    stabilizer_order,
    vertex_sets_equal,
)
from orbitbell.orbits import SOLID_NAMES, Orbit

from appendix_fixtures import GOLDEN


@pytest.mark.parametrize("name", SOLID_NAMES)
def test_canonical_solids_match_golden_vertex_sets(name, solids):
    assert vertex_sets_equal(solids[name].vertices, GOLDEN[name])


@pytest.mark.parametrize(
    "name,n,stab", [
        ("tetrahedron", 4, 6),
        ("octahedron", 6, 4),
        ("cube", 8, 6),
        ("cuboctahedron", 12, 2),
        ("truncated_octahedron", 24, 1),
    ],
)
def test_orbit_sizes_and_stabilizers(name, n, stab, solids):
    o = solids[name]
    assert len(o) == n
    assert o.stabilizer_order == stab


def test_orbit_stabilizer_product_equals_group_order(solids, s4, oh):
    for name, o in solids.items():
        order = oh.order if o.rep_name == "Oh" else s4.order
        assert len(o) * o.stabilizer_order == order


def test_vertices_unit_norm_and_distinct(solids):
    for o in solids.values():
        assert np.abs(np.linalg.norm(o.vertices, axis=1) - 1).max() < 1e-9
        d = np.abs(o.vertices[:, None] - o.vertices[None, :]).max(axis=2)
        d += 10 * np.eye(len(o))
        assert d.min() > 1e-9


def test_orbit_closed_under_rep(solids, s4, oh):
    for o in solids.values():
        rep = oh if o.rep_name == "Oh" else s4
        for g in rep.elements:
            images = o.vertices @ g.T
            dist = np.abs(images[:, None] - o.vertices[None, :]).max(axis=2)
            assert dist.min(axis=1).max() < 1e-9


def test_orbit_of_member_is_same_orbit(solids, s4):
    tetra = solids["tetrahedron"]
    for v in tetra.vertices:
        again = generate_orbit(s4, v, "tetra-again")
        assert vertex_sets_equal(again.vertices, tetra.vertices)


def test_generic_vector_has_trivial_stabilizer(s4):
    rng = np.random.default_rng(7)
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    assert stabilizer_order(s4, v) == 1
    assert len(generate_orbit(s4, v, "generic")) == 24


def test_octahedron_seed_stabilizer(s4, solids):
    assert stabilizer_order(s4, solids["octahedron"].initial_vector) == 4


def test_non_unit_seed_rejected(s4):
    with pytest.raises(NonUnitInitialVector):
        generate_orbit(s4, np.array([1.0, 1.0, 0.0]), "bad")


def test_unknown_solid_name():
    with pytest.raises(KeyError):
        canonical_solid("icosahedron")


def test_gram_tetra_tetra(solids):
    g = gram(solids["tetrahedron"], solids["tetrahedron"])
    assert np.allclose(np.diag(g.entries), 1.0)
    off = g.entries[~np.eye(4, dtype=bool)]
    assert np.allclose(off, -1 / 3)
    assert np.allclose(g.entries, g.entries.T)


def test_gram_squared_sum_identity(solids):
    for a in solids.values():
        for b in solids.values():
            g = gram(a, b)
            assert (g.entries**2).sum() == pytest.approx(len(a) * len(b) / 3, rel=1e-12)


def test_double_counting_identity(s4, oh):
    rng = np.random.default_rng(3)
    for rep in (s4, oh):
        v, w = rng.normal(size=(2, 3))
        v /= np.linalg.norm(v)
        w /= np.linalg.norm(w)
        vs = rep.elements @ v
        ws = rep.elements @ w
        total = ((vs @ ws.T) ** 2).sum()
        assert total == pytest.approx(rep.order**2 / 3, rel=1e-6)


def test_cube_is_two_dual_tetrahedra(solids):
    tetra = solids["tetrahedron"].vertices
    both = np.vstack([tetra, -tetra])
    assert vertex_sets_equal(solids["cube"].vertices, both)


def test_reflect_y_involution(solids):
    for o in solids.values():
        back = reflect_y(reflect_y(o))
        assert np.allclose(back.vertices, o.vertices)


def test_reflect_y_singleton():
    o = Orbit(
        label="up", rep_name="none",
        initial_vector=np.array([0.0, 1.0, 0.0]),
        vertices=np.array([[0.0, 1.0, 0.0]]),
        stabilizer_order=1,
    )
    assert np.allclose(reflect_y(o).vertices, [[0.0, -1.0, 0.0]])


def test_no_canonical_solid_is_reflection_invariant(solids):
    # The group-theoretic placements are all chiral w.r.t. the x-z mirror;
    # the reflected set is a different (congruent) orbit.
    for o in solids.values():
        assert not vertex_sets_equal(o.vertices, reflect_y(o).vertices)


@pytest.mark.parametrize("name", SOLID_NAMES)
def test_serialization_round_trip(name, solids):
    o = solids[name]
    back = orbit_from_json(orbit_to_json(o))
    assert back.label == o.label
    assert back.rep_name == o.rep_name
    assert back.stabilizer_order == o.stabilizer_order
    assert (back.vertices == o.vertices).all()
    assert (back.initial_vector == o.initial_vector).all()
