"""Group orbits on the unit sphere and their Gram matrices.

The measurement settings of both parties are orbits {D(g) v0} of a finite
matrix group.  The five canonical solids (tetrahedron through truncated
octahedron) are fixed orbits of the order-24 group, except the cube which
needs the order-48 extension.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import sqrt

import numpy as np

from .groups import FiniteGroupRep, oh_rep, s4_irrep

EPS_VEC = 1e-9


class NonUnitInitialVector(ValueError):
    """Orbit seed vector is not unit length."""


class StabilizerMismatch(RuntimeError):
    """Coset count |G|/N disagrees with the direct fixed-point count."""


@dataclass(frozen=True)
class Orbit:
    """Ordered, deduplicated vertex set produced by a group action."""

    label: str
    rep_name: str
    initial_vector: np.ndarray  # (3,)
    vertices: np.ndarray  # (N, 3)
    stabilizer_order: int

    def __post_init__(self):
        self.initial_vector.setflags(write=False)
        self.vertices.setflags(write=False)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class GramMatrix:
    """Raw inner products v_i . w_j between two orbits.

    The Bell coefficients are the negated entries; the sign convention is
    applied inside the bound computations, not here.
    """

    entries: np.ndarray  # (N_A, N_B)
    alice_label: str
    bob_label: str

    def __post_init__(self):
        self.entries.setflags(write=False)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape


def stabilizer_order(rep: FiniteGroupRep, v: np.ndarray) -> int:
    """Number of group elements fixing v; always divides |G|."""
    v = np.asarray(v, dtype=float)
    images = rep.elements @ v
    return int((np.abs(images - v).max(axis=1) < EPS_VEC).sum())


def generate_orbit(rep: FiniteGroupRep, v0, label: str) -> Orbit:
    """Orbit of v0 under rep, deduplicated in first-discovery order."""
    v0 = np.asarray(v0, dtype=float)
    if abs(np.linalg.norm(v0) - 1.0) > EPS_VEC:
        raise NonUnitInitialVector(f"|v0| = {np.linalg.norm(v0)!r} for {label}")
    vertices: list[np.ndarray] = []
    for g in rep.elements:
        u = g @ v0
        if not vertices or np.abs(np.array(vertices) - u).max(axis=1).min() >= EPS_VEC:
            vertices.append(u)
    n = len(vertices)
    stab = stabilizer_order(rep, v0)
    if n * stab != rep.order:
        raise StabilizerMismatch(
            f"{label}: {n} vertices x stabilizer {stab} != |G| = {rep.order}"
        )
    return Orbit(
        label=label,
        rep_name=rep.name,
        initial_vector=v0,
        vertices=np.array(vertices),
        stabilizer_order=stab,
    )


SOLID_NAMES = ("tetrahedron", "octahedron", "cube", "cuboctahedron", "truncated_octahedron")

_SOLID_SEEDS = {
    "tetrahedron": ("S4", (1.0, 0.0, 0.0)),
    "octahedron": ("S4", (1 / sqrt(3), sqrt(2 / 3), 0.0)),
    "cube": ("Oh", (1.0, 0.0, 0.0)),
    "cuboctahedron": ("S4", (-sqrt(2 / 3), 1 / sqrt(3), 0.0)),
    "truncated_octahedron": ("S4", (sqrt(3 / 5), 0.0, sqrt(2 / 5))),
}


def canonical_solid(name: str) -> Orbit:
    """One of the five canonical solids, generated from its fixed seed."""
    try:
        rep_name, v0 = _SOLID_SEEDS[name]
    except KeyError:
        raise KeyError(f"unknown solid {name!r}; choose from {SOLID_NAMES}") from None
    rep = s4_irrep() if rep_name == "S4" else oh_rep()
    return generate_orbit(rep, np.array(v0), label=name)


def gram(alice: Orbit, bob: Orbit) -> GramMatrix:
    return GramMatrix(
        entries=alice.vertices @ bob.vertices.T,
        alice_label=alice.label,
        bob_label=bob.label,
    )


def reflect_y(orbit: Orbit) -> Orbit:
    """Reflect every vertex in the x-z plane: (x, y, z) -> (x, -y, z)."""
    flip = np.array([1.0, -1.0, 1.0])
    return Orbit(
        label=orbit.label + "_yref",
        rep_name=orbit.rep_name,
        initial_vector=orbit.initial_vector * flip,
        vertices=orbit.vertices * flip,
        stabilizer_order=orbit.stabilizer_order,
    )


def vertex_sets_equal(a: np.ndarray, b: np.ndarray, eps: float = EPS_VEC) -> bool:
    """Set equality of two vertex stacks under max-entry matching."""
    a, b = np.asarray(a, float), np.asarray(b, float)
    if a.shape != b.shape:
        return False
    dist = np.abs(a[:, None, :] - b[None, :, :]).max(axis=2)
    return bool((dist.min(axis=1) < eps).all() and (dist.min(axis=0) < eps).all())


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def orbit_to_json(orbit: Orbit) -> str:
    """Flat record with 17-significant-digit numbers for exact round-trip."""
    vec = lambda v: "[" + ", ".join(_fmt(c) for c in v) + "]"
    lines = [
        "{",
        f'  "label": {json.dumps(orbit.label)},',
        f'  "rep_name": {json.dumps(orbit.rep_name)},',
        f'  "initial_vector": {vec(orbit.initial_vector)},',
        f'  "stabilizer_order": {orbit.stabilizer_order},',
        '  "vertices": [',
        ",\n".join("    " + vec(v) for v in orbit.vertices),
        "  ]",
        "}",
    ]
    return "\n".join(lines)


def orbit_from_json(text: str) -> Orbit:
    rec = json.loads(text)
    return Orbit(
        label=rec["label"],
        rep_name=rec["rep_name"],
        initial_vector=np.array(rec["initial_vector"], dtype=float),
        vertices=np.array(rec["vertices"], dtype=float),
        stabilizer_order=int(rec["stabilizer_order"]),
    )
