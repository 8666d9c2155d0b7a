"""Smith normal form over the polynomial ring and elementary divisors.

The diagonalization uses elementary row and column operations with a
minimal-degree pivot rule (ties broken row-major), then repairs the
divisibility chain by gcd/lcm passes over the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .factor import factor
from .fields import FieldSpec
from .matrices import ExactMatrix, PolyMatrix, characteristic_matrix
from .poly import Polynomial


@dataclass(frozen=True)
class InvariantFactorList:
    """Monic invariant factors of positive degree, each dividing the next."""

    factors: Tuple[Polynomial, ...]

    def __post_init__(self):
        for a, b in zip(self.factors, self.factors[1:]):
            if not a.divides(b):
                raise ValueError("invariant factors must form a divisibility chain")

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def minimal_polynomial(self) -> Polynomial:
        return self.factors[-1]

    @property
    def total_degree(self) -> int:
        return sum(int(f.degree) for f in self.factors)


@dataclass(frozen=True)
class ElementaryDivisorData:
    """Multiset of prime-power divisors (base, exponent), canonically sorted."""

    entries: Tuple[Tuple[Polynomial, int], ...]
    field: FieldSpec

    def support(self) -> Tuple[Tuple[Polynomial, int], ...]:
        """The deduplicated set of prime-power divisors."""
        seen = []
        for item in self.entries:
            if item not in seen:
                seen.append(item)
        return tuple(seen)

    @property
    def total_degree(self) -> int:
        return sum(q * int(p.degree) for p, q in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def _entry_key(item: Tuple[Polynomial, int]):
    base, exp = item
    return (base.sort_key(), exp)


def make_divisor_data(pairs, field: FieldSpec) -> ElementaryDivisorData:
    ordered = tuple(sorted(pairs, key=_entry_key))
    return ElementaryDivisorData(ordered, field)


def smith_normal_form(matrix: PolyMatrix) -> InvariantFactorList:
    """Invariant factors of positive degree of a square polynomial matrix."""
    work = matrix.mutable_rows()
    n = matrix.n
    field = matrix.field
    zero = Polynomial.zero(field)

    for k in range(n):
        while True:
            pivot = _min_degree_entry(work, k, n)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != k:
                work[k], work[pi] = work[pi], work[k]
            if pj != k:
                for row in work:
                    row[k], row[pj] = row[pj], row[k]
            piv = work[k][k]
            dirty = False
            for i in range(k + 1, n):
                if not work[i][k].is_zero():
                    q, r = divmod(work[i][k], piv)
                    if not q.is_zero():
                        work[i] = [a - q * b for a, b in zip(work[i], work[k])]
                    if not r.is_zero():
                        dirty = True
            for j in range(k + 1, n):
                if not work[k][j].is_zero():
                    q, r = divmod(work[k][j], piv)
                    if not q.is_zero():
                        for row in work:
                            row[j] = row[j] - q * row[k]
                    if not r.is_zero():
                        dirty = True
            if not dirty:
                break
        # Row and column k are now clear apart from the diagonal.

    diagonal = [work[i][i] for i in range(n) if not work[i][i].is_zero()]
    diagonal = _repair_chain(diagonal)
    positive = tuple(d.monic() for d in diagonal if d.degree >= 1)
    return InvariantFactorList(positive)


def _min_degree_entry(work, k: int, n: int):
    best = None
    best_deg = None
    for i in range(k, n):
        for j in range(k, n):
            p = work[i][j]
            if p.is_zero():
                continue
            if best_deg is None or p.degree < best_deg:
                best, best_deg = (i, j), p.degree
    return best


def _repair_chain(diagonal: List[Polynomial]) -> List[Polynomial]:
    d = [p.monic() for p in diagonal]
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if not d[i].divides(d[j]):
                    g = d[i].gcd(d[j])
                    l = (d[i] * d[j]).exact_div(g).monic()
                    d[i], d[j] = g, l
                    changed = True
    d.sort(key=lambda p: p.sort_key())
    return d


def invariant_factors(c: ExactMatrix) -> InvariantFactorList:
    return smith_normal_form(characteristic_matrix(c))


def elementary_divisors(c: ExactMatrix, seed: int = 0) -> ElementaryDivisorData:
    """Prime-power divisors collected across all invariant factors."""
    return divisors_from_invariant_factors(invariant_factors(c), c.field, seed=seed)


def divisors_from_invariant_factors(
    inv: InvariantFactorList, field: FieldSpec, seed: int = 0
) -> ElementaryDivisorData:
    pairs = []
    for d in inv:
        for base, mult in factor(d, seed=seed):
            pairs.append((base, mult))
    return make_divisor_data(pairs, field)


def invariant_factors_from_divisors(
    data: ElementaryDivisorData,
) -> InvariantFactorList:
    """Reassemble the divisibility chain from the prime-power multiset.

    The largest exponent of every base goes into the last factor, the second
    largest into the one before it, and so on.
    """
    by_base = {}
    for base, exp in data.entries:
        by_base.setdefault(base, []).append(exp)
    for exps in by_base.values():
        exps.sort(reverse=True)
    depth = max((len(v) for v in by_base.values()), default=0)
    one = Polynomial.one(data.field)
    chain = []
    for level in range(depth):
        f = one
        for base, exps in by_base.items():
            if level < len(exps):
                f = f * base ** exps[level]
        chain.append(f.monic())
    chain.reverse()
    return InvariantFactorList(tuple(chain))
