"""Fast path for permutation matrices, driven entirely by cycle types.

For a permutation with cycle lengths (l_1, ..., l_k) over a field of
characteristic p >= 0, write l_i = p^{v_i} * l_i' with p coprime to l_i'.
The prime-power divisor multiset is then one copy of g^{p^{v_i}} for every
irreducible factor g of x^{l_i'} - 1 and every cycle, with no matrix
computation at all.  Conjugation invariance makes the cycle type a complete
input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import NotAPermutationError
from .factor import factor_x_pow_m_minus_1
from .fields import FieldSpec
from .matrices import ExactMatrix
from .smith import ElementaryDivisorData, make_divisor_data
from .structure import StructureReport, difference_data, report_from_divisors


@dataclass(frozen=True)
class CycleType:
    """A partition: cycle lengths sorted descending, n their sum."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("cycle type needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError("cycle lengths must be positive")
        if tuple(sorted(self.parts, reverse=True)) != self.parts:
            raise ValueError("parts must be sorted descending")

    @staticmethod
    def of(parts: Sequence[int]) -> "CycleType":
        return CycleType(tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self):
        runs = []
        i = 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            count = j - i
            runs.append(f"{self.parts[i]}^{count}" if count > 1 else str(self.parts[i]))
            i = j
        return ",".join(runs)


def nu_p(m: int, p: int) -> int:
    """Largest s with p^s dividing m; zero in characteristic zero."""
    if m < 1:
        raise ValueError("argument must be a positive integer")
    if p == 0:
        return 0
    s = 0
    while m % p == 0:
        m //= p
        s += 1
    return s


def coprime_part(m: int, p: int) -> int:
    return m // p ** nu_p(m, p) if p else m


def permutation_matrix(images: Sequence[int], field: FieldSpec) -> ExactMatrix:
    """0/1 matrix with a one at (i, sigma(i)); images are 1-based."""
    n = len(images)
    if sorted(images) != list(range(1, n + 1)):
        raise NotAPermutationError(f"{images} is not a bijection of 1..{n}")
    rows = [[0] * n for _ in range(n)]
    for i, img in enumerate(images):
        rows[i][img - 1] = 1
    return ExactMatrix(rows, field)


def images_from_cycles(cycles: Sequence[Sequence[int]], n: int = 0) -> List[int]:
    """Image list of a product of disjoint cycles on 1..n (1-based)."""
    seen = set()
    for cyc in cycles:
        for v in cyc:
            if not isinstance(v, int) or v < 1:
                raise NotAPermutationError("cycle entries must be positive integers")
            if v in seen:
                raise NotAPermutationError(f"element {v} appears in two cycles")
            seen.add(v)
    size = max(seen) if seen else 0
    n = max(n, size)
    if n < 1:
        raise NotAPermutationError("empty permutation")
    images = list(range(1, n + 1))
    for cyc in cycles:
        for k, v in enumerate(cyc):
            images[v - 1] = cyc[(k + 1) % len(cyc)]
    return images


def cycle_type_of_images(images: Sequence[int]) -> CycleType:
    n = len(images)
    if sorted(images) != list(range(1, n + 1)):
        raise NotAPermutationError(f"{images} is not a bijection of 1..{n}")
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = images[v] - 1
            length += 1
        parts.append(length)
    return CycleType.of(parts)


def cycle_matrix(lam: CycleType, field: FieldSpec) -> ExactMatrix:
    """The canonical permutation matrix of a cycle type (one block per part)."""
    images = []
    offset = 0
    for part in lam.parts:
        images.extend([offset + 2 + i for i in range(part - 1)] + [offset + 1])
        offset += part
    return permutation_matrix(images, field)


def permutation_elementary_divisors(
    lam: CycleType, field: FieldSpec, seed: int = 0
) -> ElementaryDivisorData:
    """Prime-power divisor multiset of the permutation matrix, from the cycle type."""
    p = field.characteristic
    pairs = []
    for part in lam.parts:
        mult = p ** nu_p(part, p) if p else 1
        base_exp = coprime_part(part, p)
        for g, _one in factor_x_pow_m_minus_1(base_exp, field, seed=seed):
            pairs.append((g, mult))
    return make_divisor_data(pairs, field)


def permutation_structure_report(
    lam: CycleType, field: FieldSpec, seed: int = 0
) -> StructureReport:
    data = permutation_elementary_divisors(lam, field, seed=seed)
    return report_from_divisors(data, field, lam.n)


def regular_singular_parts(lam: CycleType, p: int) -> Tuple[CycleType, CycleType]:
    """Split into the part coprime to p and the part divisible by p.

    Both results are padded with fixed points back to the full degree n; in
    characteristic zero the regular part is the whole type.
    """
    if p == 0:
        regular = list(lam.parts)
        singular: List[int] = []
    else:
        regular = [part for part in lam.parts if part % p]
        singular = [part for part in lam.parts if part % p == 0]
    n = lam.n
    regular += [1] * (n - sum(regular))
    singular += [1] * (n - sum(singular))
    return CycleType.of(regular), CycleType.of(singular)


def rep_finite_for_cycle_type(lam: CycleType, p: int) -> bool:
    """Representation-finiteness: all positive p-valuations of parts coincide."""
    if p == 0:
        return True
    positive = {nu_p(part, p) for part in lam.parts} - {0}
    return len(positive) <= 1


def fixed_point_extension_equivalent(lam: CycleType, p: int) -> bool:
    """Whether adjoining one fixed point preserves the commutant up to
    Morita (hence derived) equivalence: some cycle length is coprime to p."""
    if p == 0:
        return True
    return any(part % p for part in lam.parts)


# ---------------------------------------------------------------------------
# Algebraic-closure mode
# ---------------------------------------------------------------------------


def euler_phi(d: int) -> int:
    out = d
    m = d
    q = 2
    while q * q <= m:
        if m % q == 0:
            out -= out // q
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out -= out // m
    return out


@dataclass(frozen=True)
class ClosurePoint:
    """Eigenvalue class over the algebraic closure: all primitive d-th roots
    of unity share one multiplicative order, one count, and one exponent set."""

    order: int
    count: int
    exponent_set: Tuple[int, ...]


def closure_structure(lam: CycleType, p: int) -> Tuple[ClosurePoint, ...]:
    """Eigenvalue census over the algebraic closure, purely combinatorial.

    Roots of unity are tracked by multiplicative order d with weight phi(d);
    the exponent set of order d collects p^{v_p(part)} over the parts whose
    coprime component d divides.
    """
    exps: Dict[int, set] = {}
    for part in lam.parts:
        mult = p ** nu_p(part, p) if p else 1
        base = coprime_part(part, p)
        for d in _divisors(base):
            exps.setdefault(d, set()).add(mult)
    points = [
        ClosurePoint(order=d, count=euler_phi(d), exponent_set=tuple(sorted(s)))
        for d, s in sorted(exps.items())
    ]
    return tuple(points)


def _divisors(m: int) -> List[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def closure_point_total(points: Sequence[ClosurePoint]) -> int:
    return sum(pt.count for pt in points)


def _closure_class_key(exponent_set: Tuple[int, ...], kind: str):
    values = set(exponent_set)
    if kind == "morita":
        return tuple(sorted(values))
    if kind == "derived":
        return difference_data(values).gap_multiset
    if kind == "almost_nu_stable_derived":
        # The relation "equal or top-delta related" partitions exponent sets
        # into classes of size at most two; key by the smaller representative.
        a = tuple(sorted(values))
        b = tuple(sorted(difference_data(values).top_deltas))
        return min(a, b)
    raise ValueError(f"unknown equivalence kind {kind!r}")


def closure_equivalent(a: CycleType, b: CycleType, p: int, kind: str) -> bool:
    """Equivalence of the two commutants over the algebraic closure.

    Every eigenvalue is its own block with a one-dimensional quotient algebra,
    so blocks match exactly when their exponent data are compatible; it
    suffices to compare phi-weighted totals per compatibility class.
    """
    counts_a: Dict[object, int] = {}
    counts_b: Dict[object, int] = {}
    for pt in closure_structure(a, p):
        key = _closure_class_key(pt.exponent_set, kind)
        counts_a[key] = counts_a.get(key, 0) + pt.count
    for pt in closure_structure(b, p):
        key = _closure_class_key(pt.exponent_set, kind)
        counts_b[key] = counts_b.get(key, 0) + pt.count
    return counts_a == counts_b


def parse_cycle_type(text: str) -> CycleType:
    """Parse "15,4" or "4,1^15" into a cycle type."""
    parts: List[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ValueError("empty cycle-type token")
        if "^" in token:
            base, count = token.split("^", 1)
            parts.extend([int(base)] * int(count))
        else:
            parts.append(int(token))
    return CycleType.of(parts)
