"""Homological invariants of the commutant algebra, read off the block data.

Every block is the endomorphism algebra of a module over a local symmetric
Nakayama algebra, so representation type, dominant dimension, and finiteness
of the finitistic dimension are all functions of the power-index sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf
from typing import List, Sequence, Tuple, Union

from .structure import StructureReport

Dominant = Union[int, float]


@dataclass(frozen=True)
class HomologicalReport:
    rep_finite: bool
    dominant_dimension: Dominant
    findim_finite: bool
    is_symmetric_nakayama: bool


def rep_finite(report: StructureReport) -> bool:
    """Representation-finiteness criterion on each block's power indices.

    With b = max(P union {3}), the block is representation-finite exactly
    when P is contained in {1, b-1, b}; all blocks must pass.
    """
    for block in report.blocks:
        indices = set(block.power_indices)
        b = max(indices | {3})
        if not indices <= {1, b - 1, b}:
            return False
    return True


def dominant_dimension(report: StructureReport) -> Dominant:
    """Infinite exactly when every power-index set is a singleton, else 2."""
    if all(len(block.power_indices) == 1 for block in report.blocks):
        return inf
    return 2


def homological_report(report: StructureReport) -> HomologicalReport:
    dom = dominant_dimension(report)
    return HomologicalReport(
        rep_finite=rep_finite(report),
        dominant_dimension=dom,
        # Finiteness of the finitistic dimension holds for every commutant
        # algebra of a matrix over a field; only the finiteness is reported.
        findim_finite=True,
        is_symmetric_nakayama=(dom == inf),
    )


# ---------------------------------------------------------------------------
# Integer congruence of the block Cartan matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CartanBlockMatrix:
    """Symmetric integer matrix with entry (k, l) = scale * u_{max(k, l)}."""

    size: int
    scale: int
    entries: Tuple[Tuple[int, ...], ...]


def cartan_block(u: Sequence[int], scale: int = 1) -> CartanBlockMatrix:
    if not u:
        raise ValueError("sequence must be non-empty")
    if any(a <= b for a, b in zip(u, u[1:])) or any(v < 1 for v in u):
        raise ValueError("sequence must be strictly decreasing and positive")
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    h = len(u)
    rows = tuple(
        tuple(scale * u[max(k, l)] for l in range(h)) for k in range(h)
    )
    return CartanBlockMatrix(size=h, scale=scale, entries=rows)


def _difference_diagonal(m: Sequence[int]) -> List[int]:
    return [m[i] - m[i + 1] for i in range(len(m) - 1)] + [m[-1]]


def _mat_mul_int(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            if a[i][t]:
                for j in range(m):
                    out[i][j] += a[i][t] * b[t][j]
    return out


def _transpose(a):
    return [list(row) for row in zip(*a)]


def cartan_congruent(m: Sequence[int], n: Sequence[int]) -> bool:
    """Integer congruence of the two Cartan block matrices built from m and n.

    Decided by equality of the consecutive-difference multisets; the
    unimodular transform U = I - sum e_{t,t+1} diagonalizing both matrices is
    verified internally as a sanity assertion.
    """
    if len(m) != len(n):
        raise ValueError("sequences must have equal length")
    if len(m) < 2:
        raise ValueError("congruence test needs length at least 2")
    if m[0] != n[0]:
        raise ValueError("sequences must share their first entry")
    for seq in (m, n):
        if any(a <= b for a, b in zip(seq, seq[1:])) or any(v < 1 for v in seq):
            raise ValueError("sequences must be strictly decreasing and positive")
    for seq in (m, n):
        x = cartan_block(seq).entries
        u = _unimodular_reducer(len(seq))
        reduced = _mat_mul_int(_mat_mul_int(_transpose(u), [list(r) for r in x]), u)
        expected = _difference_diagonal(seq)
        assert reduced == [
            [expected[i] if i == j else 0 for j in range(len(seq))]
            for i in range(len(seq))
        ], "unimodular reduction identity failed"
    return sorted(_difference_diagonal(list(m))) == sorted(_difference_diagonal(list(n)))


def _unimodular_reducer(s: int) -> List[List[int]]:
    u = [[1 if i == j else 0 for j in range(s)] for i in range(s)]
    for t in range(s - 1):
        u[t][t + 1] = -1
    return u
