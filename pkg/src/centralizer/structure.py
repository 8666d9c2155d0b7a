"""Block structure of the commutant algebra of a matrix.

The prime-power divisors of the characteristic matrix determine one block per
maximal divisor.  Each block carries the set of exponents at which its base
occurs (the power indices); the difference combinatorics of those sets drive
every equivalence decision and homological invariant downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .fields import FieldSpec
from .matrices import ExactMatrix
from .poly import Polynomial
from .smith import (
    ElementaryDivisorData,
    InvariantFactorList,
    divisors_from_invariant_factors,
    invariant_factors,
    invariant_factors_from_divisors,
)


@dataclass(frozen=True)
class MaximalDivisorRecord:
    """One block: base irreducible, its top exponent, and all its exponents."""

    base: Polynomial
    exponent: int
    power_indices: Tuple[int, ...]

    def __post_init__(self):
        if not self.power_indices:
            raise ValueError("power index set cannot be empty")
        if max(self.power_indices) != self.exponent:
            raise ValueError("top power index must equal the exponent")

    @property
    def is_reducible(self) -> bool:
        """Whether the maximal divisor base^exponent is itself reducible."""
        return self.exponent >= 2 or self.base.degree >= 2

    def divisor(self) -> Polynomial:
        return self.base**self.exponent


@dataclass(frozen=True)
class DifferenceData:
    """Consecutive-gap multiset and top-anchored difference set of a finite set.

    For values m_1 > m_2 > ... > m_s the gap multiset is
    {{m_1 - m_2, ..., m_{s-1} - m_s, m_s}} and the top-anchored set is
    {m_1, m_1 - m_2, ..., m_1 - m_s}.  Taking top-anchored differences twice
    returns the original set.
    """

    source: Tuple[int, ...]
    gap_multiset: Tuple[int, ...]
    top_deltas: Tuple[int, ...]


def difference_data(values: Iterable[int]) -> DifferenceData:
    vals = list(values)
    if not vals:
        raise ValueError("difference data of the empty set is undefined")
    if len(set(vals)) != len(vals):
        raise ValueError("values must be distinct")
    if any(v < 1 for v in vals):
        raise ValueError("values must be positive integers")
    desc = sorted(vals, reverse=True)
    gaps = [desc[i] - desc[i + 1] for i in range(len(desc) - 1)] + [desc[-1]]
    top = [desc[0]] + [desc[0] - v for v in desc[1:]]
    return DifferenceData(
        source=tuple(desc),
        gap_multiset=tuple(sorted(gaps)),
        top_deltas=tuple(sorted(top, reverse=True)),
    )


def maximal_divisors(data: ElementaryDivisorData) -> Tuple[MaximalDivisorRecord, ...]:
    """Group the prime-power multiset by base and keep the divisibility maxima."""
    by_base = {}
    for base, exp in data.entries:
        by_base.setdefault(base, set()).add(exp)
    records = []
    for base, exps in by_base.items():
        indices = tuple(sorted(exps))
        records.append(
            MaximalDivisorRecord(
                base=base, exponent=indices[-1], power_indices=indices
            )
        )
    records.sort(key=lambda r: (r.base.sort_key(), r.exponent))
    return tuple(records)


def centralizer_dimension(inv: InvariantFactorList) -> int:
    """Dimension of the commutant from invariant-factor degrees.

    With d_1 | d_2 | ... | d_s the dimension is sum (2s - 2i + 1) * deg d_i;
    the smallest factor receives the largest weight.
    """
    factors = list(inv)
    if not factors:
        raise ValueError("invariant factor list is empty")
    s = len(factors)
    return sum((2 * s - 2 * i + 1) * int(d.degree) for i, d in enumerate(factors, 1))


def is_full_polynomial_centralizer(c: ExactMatrix) -> bool:
    """True when the commutant is the polynomial algebra generated by c itself,
    i.e. the characteristic and minimal polynomials coincide."""
    return len(invariant_factors(c)) == 1


@dataclass(frozen=True)
class StructureReport:
    field: FieldSpec
    n: int
    minimal_polynomial: Polynomial
    invariant_factor_list: InvariantFactorList
    elementary: ElementaryDivisorData
    blocks: Tuple[MaximalDivisorRecord, ...]
    frobenius_dimension: int
    is_full_centralizer_polynomial: bool

    @property
    def block_count(self) -> int:
        return len(self.blocks)


def report_from_divisors(
    data: ElementaryDivisorData, field: FieldSpec, n: int
) -> StructureReport:
    inv = invariant_factors_from_divisors(data)
    blocks = maximal_divisors(data)
    return StructureReport(
        field=field,
        n=n,
        minimal_polynomial=inv.minimal_polynomial,
        invariant_factor_list=inv,
        elementary=data,
        blocks=blocks,
        frobenius_dimension=centralizer_dimension(inv),
        is_full_centralizer_polynomial=(len(inv) == 1 and inv.total_degree == n),
    )


def structure_report(c: ExactMatrix, seed: int = 0) -> StructureReport:
    """Full block report for a matrix, via the Smith normal form path."""
    inv = invariant_factors(c)
    data = divisors_from_invariant_factors(inv, c.field, seed=seed)
    blocks = maximal_divisors(data)
    return StructureReport(
        field=c.field,
        n=c.n,
        minimal_polynomial=inv.minimal_polynomial,
        invariant_factor_list=inv,
        elementary=data,
        blocks=blocks,
        frobenius_dimension=centralizer_dimension(inv),
        is_full_centralizer_polynomial=(len(inv) == 1),
    )
