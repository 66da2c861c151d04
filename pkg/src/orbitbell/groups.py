"""Finite groups of real orthogonal 3x3 matrices.

Provides the 24-element transposition-generated group acting on R^3
(the standard three-dimensional action of the symmetric group on four
letters), its order-48 extension by -I, and the cyclic order-4 subgroup
in its subduced basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import sqrt

import numpy as np

EPS_MAT = 1e-9

_IDENTITY = np.eye(3)


class NonOrthogonalGenerator(ValueError):
    """A generator matrix is not orthogonal within tolerance."""


class OrderExceeded(RuntimeError):
    """Multiplicative closure passed the allowed group order."""


@dataclass(frozen=True)
class FiniteGroupRep:
    """A finite set of orthogonal 3x3 matrices closed under multiplication.

    elements[0] is the identity.  mult_table[i, j] is the index of
    elements[i] @ elements[j]; inverse_table[i] the index of the inverse.
    """

    name: str
    elements: np.ndarray  # (n, 3, 3)
    mult_table: np.ndarray = field(repr=False)  # (n, n) int
    inverse_table: np.ndarray = field(repr=False)  # (n,) int

    def __post_init__(self):
        for arr in (self.elements, self.mult_table, self.inverse_table):
            arr.setflags(write=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def _match_index(m: np.ndarray, elements: np.ndarray) -> int:
    """Index of m in the element stack, or -1 if absent (max-entry metric)."""
    if len(elements) == 0:
        return -1
    dist = np.abs(elements - m).max(axis=(1, 2))
    i = int(dist.argmin())
    return i if dist[i] < EPS_MAT else -1


def _check_orthogonal(m: np.ndarray) -> None:
    if np.abs(m.T @ m - _IDENTITY).max() > EPS_MAT:
        raise NonOrthogonalGenerator(f"generator is not orthogonal:\n{m}")
    if abs(abs(np.linalg.det(m)) - 1.0) > EPS_MAT:
        raise NonOrthogonalGenerator(f"generator determinant is not +-1:\n{m}")


def _sort_key(m: np.ndarray):
    return tuple(np.round(m, 12).ravel())


def close_under_multiplication(
    generators: list[np.ndarray], max_order: int = 1024, name: str = "closure"
) -> FiniteGroupRep:
    """Smallest multiplicatively closed matrix set containing the generators.

    Breadth-first over products, identity first; new elements of each BFS
    level are appended in lexicographic order of their rounded entries, so
    the element ordering is deterministic across platforms.
    """
    gens = [np.asarray(g, dtype=float) for g in generators]
    for g in gens:
        _check_orthogonal(g)

    elements = [_IDENTITY.copy()]
    frontier = [_IDENTITY.copy()]
    while frontier:
        produced = []
        for e in frontier:
            for g in gens:
                p = e @ g
                if _match_index(p, np.array(elements)) < 0 and all(
                    np.abs(p - q).max() >= EPS_MAT for q in produced
                ):
                    produced.append(p)
        produced.sort(key=_sort_key)
        elements.extend(produced)
        frontier = produced
        if len(elements) > max_order:
            raise OrderExceeded(
                f"closure exceeded max_order={max_order}; drifting or infinite group"
            )

    stack = np.array(elements)
    n = len(stack)
    mult = np.empty((n, n), dtype=np.intp)
    for i in range(n):
        prods = stack[i] @ stack  # (n, 3, 3)
        dist = np.abs(prods[:, None, :, :] - stack[None, :, :, :]).max(axis=(2, 3))
        idx = dist.argmin(axis=1)
        if dist[np.arange(n), idx].max() >= EPS_MAT:
            raise OrderExceeded("product fell outside the closed set")
        mult[i] = idx
    inverse = np.empty(n, dtype=np.intp)
    for i in range(n):
        (js,) = np.nonzero(mult[i] == 0)
        inverse[i] = js[0]
    return FiniteGroupRep(name=name, elements=stack, mult_table=mult, inverse_table=inverse)


def _transposition_matrices() -> list[np.ndarray]:
    s2, s3, s6 = sqrt(2.0), sqrt(3.0), sqrt(6.0)
    d12 = np.array([[1, 0, 0], [0, 1, 0], [0, 0, -1]], dtype=float)
    d13 = np.array([[1, 0, 0], [0, -0.5, -s3 / 2], [0, -s3 / 2, 0.5]])
    d14 = np.array(
        [
            [-1 / 3, -s2 / 3, -s6 / 3],
            [-s2 / 3, 5 / 6, -s3 / 6],
            [-s6 / 3, -s3 / 6, 0.5],
        ]
    )
    d23 = np.array([[1, 0, 0], [0, -0.5, s3 / 2], [0, s3 / 2, 0.5]])
    d24 = np.array(
        [
            [-1 / 3, -s2 / 3, s6 / 3],
            [-s2 / 3, 5 / 6, s3 / 6],
            [s6 / 3, s3 / 6, 0.5],
        ]
    )
    d34 = np.array(
        [
            [-1 / 3, 2 * s2 / 3, 0],
            [2 * s2 / 3, 1 / 3, 0],
            [0, 0, 1],
        ]
    )
    return [d12, d13, d14, d23, d24, d34]


@lru_cache(maxsize=None)
def s4_irrep() -> FiniteGroupRep:
    """The 24-element group generated by the six transposition matrices."""
    return close_under_multiplication(_transposition_matrices(), max_order=24, name="S4")


@lru_cache(maxsize=None)
def oh_rep() -> FiniteGroupRep:
    """The 48-element full octahedral group {+-M : M in s4_irrep()}."""
    return close_under_multiplication(
        _transposition_matrices() + [-_IDENTITY], max_order=48, name="Oh"
    )


@lru_cache(maxsize=None)
def z4_rep() -> FiniteGroupRep:
    """The cyclic order-4 group {e, g, g^2, g^3} in the subduced basis."""
    g = np.array([[-1, 0, 0], [0, 0, 1], [0, -1, 0]], dtype=float)
    elements = np.array([_IDENTITY, g, g @ g, g @ g @ g])
    mult = np.array([[(i + j) % 4 for j in range(4)] for i in range(4)], dtype=np.intp)
    inverse = np.array([(-i) % 4 for i in range(4)], dtype=np.intp)
    return FiniteGroupRep(name="Z4", elements=elements, mult_table=mult, inverse_table=inverse)


def verify_orthogonality(rep: FiniteGroupRep) -> float:
    """Max deviation of sum_g D_ab(g) D_cd(g) from (|G|/3) d_ac d_bd.

    Near zero for a real 3D irreducible representation; large for a
    reducible one (the report passes no judgement either way).
    """
    summed = np.einsum("gab,gcd->abcd", rep.elements, rep.elements)
    target = (rep.order / 3.0) * np.einsum(
        "ac,bd->abcd", _IDENTITY, _IDENTITY
    )
    return float(np.abs(summed - target).max())
