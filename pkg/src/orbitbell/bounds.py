"""Quantum values and exact classical bounds of the orbit Bell functional.

The quantum value for the rotation-invariant maximally entangled state is
the sum of squared Gram entries; for same-irrep orbits it collapses to
N_A * N_B / 3.  The classical bound is the exact maximum of the bilinear
form sum_ij A_i B_j (v_i . w_j) over deterministic +-1 strategies, found
by exhaustive search over the smaller side.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .groups import FiniteGroupRep
from .orbits import GramMatrix, Orbit, gram, reflect_y

MAX_ENUM_SIDE = 30  # 2^30 half-strategies is the search ceiling
MAX_ORACLE_TOTAL = 26  # 2^26 strategy pairs for the double enumeration
MAX_CLASSIFY = 24

_CHUNK_BITS = 16


class BudgetExceeded(RuntimeError):
    """Enumeration would exceed the allowed strategy-space size."""


class DimensionMismatch(ValueError):
    """Strategy length does not match the Gram matrix."""


@dataclass(frozen=True)
class Strategy:
    """Deterministic +-1 outcome assignment, one sign per setting."""

    signs: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError(f"signs must be +-1, got {self.signs}")

    def __len__(self) -> int:
        return len(self.signs)

    def __str__(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    @classmethod
    def from_string(cls, text: str) -> "Strategy":
        return cls(tuple(1 if c == "+" else -1 for c in text))


@dataclass(frozen=True)
class BoundResult:
    classical_bound: float
    quantum_value: float
    alice_strategy: Strategy
    bob_strategy: Strategy

    @property
    def ratio(self) -> float:
        return self.quantum_value / self.classical_bound


@dataclass(frozen=True)
class OrbitClass:
    """One group orbit of signed vertex sums: representative, size, length."""

    representative: np.ndarray  # (3,)
    size: int
    length: float


@dataclass(frozen=True)
class ClassicalOrbitDecomposition:
    """Partition of the 2^N signed vertex sums into group orbits, by plus-count."""

    orbit_label: str
    n_settings: int
    by_plus_count: dict[int, list[OrbitClass]]

    def total_assignments(self) -> int:
        return sum(c.size for classes in self.by_plus_count.values() for c in classes)


def quantum_value(g: GramMatrix) -> float:
    """Sum of squared Gram entries."""
    return float((g.entries**2).sum())


def quantum_value_closed_form(n_a: int, n_b: int) -> float:
    """N_A * N_B / 3; valid when both orbits come from one real 3D irrep."""
    if n_a < 1 or n_b < 1:
        raise ValueError("setting counts must be positive")
    return n_a * n_b / 3.0


def evaluate_strategies(g: GramMatrix, a: Strategy, b: Strategy) -> float:
    """The bilinear form sum_ij A_i B_j (v_i . w_j)."""
    m = g.entries
    if len(a) != m.shape[0] or len(b) != m.shape[1]:
        raise DimensionMismatch(
            f"strategies {len(a)}x{len(b)} vs gram {m.shape[0]}x{m.shape[1]}"
        )
    av = np.array(a.signs, dtype=float)
    bv = np.array(b.signs, dtype=float)
    return float(av @ m @ bv)


def _sign_block(start: int, stop: int, n: int) -> np.ndarray:
    """Sign rows for encodings start..stop-1.

    Encoding: sign +1 is bit 0, -1 is bit 1; index 0 is the most
    significant bit and is pinned to +1 (global sign symmetry), so the
    encoding only carries the trailing n-1 positions.
    """
    e = np.arange(start, stop, dtype=np.uint64)
    shifts = np.arange(n - 2, -1, -1, dtype=np.uint64)
    bits = ((e[:, None] >> shifts[None, :]) & 1).astype(np.int8)
    signs = np.ones((stop - start, n), dtype=float)
    signs[:, 1:] = 1 - 2 * bits
    return signs


def _search_range(m: np.ndarray, start: int, stop: int) -> tuple[float, int]:
    """Best (value, encoding) over the encoding range [start, stop)."""
    n = m.shape[0]
    best_val, best_enc = -np.inf, -1
    for lo in range(start, stop, 1 << _CHUNK_BITS):
        hi = min(lo + (1 << _CHUNK_BITS), stop)
        signs = _sign_block(lo, hi, n)
        vals = np.abs(signs @ m).sum(axis=1)
        i = int(vals.argmax())  # first occurrence = smallest encoding
        if vals[i] > best_val:
            best_val, best_enc = float(vals[i]), lo + i
    return best_val, best_enc


def _decode(enc: int, n: int) -> tuple[int, ...]:
    return (1,) + tuple(1 - 2 * ((enc >> (n - 1 - i)) & 1) for i in range(1, n))


def classical_bound(g: GramMatrix, threads: int = 0) -> BoundResult:
    """Exact classical bound by exhaustive search over the smaller side.

    The returned strategy pair maximizes the bilinear form directly; among
    maximizers the enumerated-side sign vector with the smallest encoding
    is reported, and responder signs at exact zero sums are set to +1.
    """
    m = g.entries
    transposed = m.shape[1] < m.shape[0]
    work = m.T if transposed else m
    n = work.shape[0]
    if n > MAX_ENUM_SIDE:
        raise BudgetExceeded(f"min(N_A, N_B) = {n} > {MAX_ENUM_SIDE}")

    total = 1 << (n - 1)
    if threads and threads > 1 and total > (1 << _CHUNK_BITS):
        # Partition on chunk boundaries so every chunk is evaluated with the
        # same shape as in the sequential search; the reduction then yields
        # a bit-identical result for any thread count.
        n_chunks = -(-total // (1 << _CHUNK_BITS))
        per = -(-n_chunks // threads)
        ranges = [
            (i << _CHUNK_BITS, min((i + per) << _CHUNK_BITS, total))
            for i in range(0, n_chunks, per)
        ]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda se: _search_range(work, *se), ranges))
        best_val, best_enc = max(parts, key=lambda p: (p[0], -p[1]))
    else:
        best_val, best_enc = _search_range(work, 0, total)

    enum_signs = _decode(best_enc, n)
    col = np.array(enum_signs, dtype=float) @ work
    other_signs = tuple(1 if c >= 0 else -1 for c in col)
    if transposed:
        a, b = Strategy(other_signs), Strategy(enum_signs)
    else:
        a, b = Strategy(enum_signs), Strategy(other_signs)
    return BoundResult(
        classical_bound=best_val,
        quantum_value=quantum_value(g),
        alice_strategy=a,
        bob_strategy=b,
    )


def classical_bound_oracle(g: GramMatrix) -> float:
    """Independent check: brute force over ALL strategy pairs.

    No absolute-value shortcut: every (A, B) pair is evaluated on the
    bilinear form and the plain maximum is returned.
    """
    m = g.entries
    n_a, n_b = m.shape
    if n_a + n_b > MAX_ORACLE_TOTAL:
        raise BudgetExceeded(f"N_A + N_B = {n_a + n_b} > {MAX_ORACLE_TOTAL}")
    sa = _all_signs(n_a)
    sb = _all_signs(n_b)
    x = sa @ m  # (2^n_a, n_b)
    best = -np.inf
    for lo in range(0, len(sb), 1 << 12):
        vals = x @ sb[lo : lo + (1 << 12)].T
        best = max(best, float(vals.max()))
    return best


def _all_signs(n: int) -> np.ndarray:
    e = np.arange(1 << n, dtype=np.uint64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    bits = ((e[:, None] >> shifts[None, :]) & 1).astype(np.int8)
    return (1 - 2 * bits).astype(float)


def classify_classical_vectors(
    orbit: Orbit, rep: FiniteGroupRep
) -> ClassicalOrbitDecomposition:
    """Group the 2^N signed vertex sums into orbits under the rep action.

    Keyed by the number of +1 signs.  Zero sums are reported as trivial
    orbits of size 1, one per assignment.  Orbit sizes count assignments,
    so they total 2^N.
    """
    verts = orbit.vertices
    n = len(verts)
    if n > MAX_CLASSIFY:
        raise BudgetExceeded(f"N = {n} > {MAX_CLASSIFY}")
    signs = _all_signs(n)
    sums = signs @ verts  # (2^n, 3)
    plus_counts = (signs > 0).sum(axis=1).astype(int)
    lengths = np.linalg.norm(sums, axis=1)

    def key(v: np.ndarray) -> tuple:
        return tuple(np.round(v, 9) + 0.0)

    def canonical(v: np.ndarray) -> tuple:
        images = rep.elements @ v
        return min(key(u) for u in images)

    by_plus: dict[int, list[OrbitClass]] = {p: [] for p in range(n + 1)}
    canon_cache: dict[tuple, tuple] = {}
    groups: dict[tuple[int, tuple], list[int]] = {}
    for i in range(len(sums)):
        if lengths[i] < EPS_SUM:
            by_plus[plus_counts[i]].append(
                OrbitClass(representative=np.zeros(3), size=1, length=0.0)
            )
            continue
        k = key(sums[i])
        if k not in canon_cache:
            canon_cache[k] = canonical(sums[i])
        groups.setdefault((plus_counts[i], canon_cache[k]), []).append(i)

    for (p, canon), members in sorted(groups.items()):
        # length from an unrounded member; all members share it exactly
        by_plus[p].append(
            OrbitClass(
                representative=np.array(canon, dtype=float),
                size=len(members),
                length=float(lengths[members[0]]),
            )
        )
    return ClassicalOrbitDecomposition(
        orbit_label=orbit.label, n_settings=n, by_plus_count=by_plus
    )


EPS_SUM = 1e-9


def phi_plus_quantum_value(alice: Orbit, bob: Orbit) -> float:
    """Quantum value of the reflected functional sum_ij (v_i . I_y w_j)^2."""
    return quantum_value(gram(alice, reflect_y(bob)))
