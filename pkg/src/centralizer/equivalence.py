"""Equivalence decisions between commutant algebras of two matrices.

Three relations are decided, each by searching a bijection between the
maximal-divisor blocks of the two matrices:

* morita: matched blocks have isomorphic quotient algebras and equal
  power-index sets;
* derived: isomorphic quotients and equal consecutive-gap multisets;
* almost_nu_stable_derived: isomorphic quotients, and power indices equal or
  related by the top-anchored difference involution.

Quotient algebras R[x]/(p^a) and R[x]/(q^b) over a perfect field are
isomorphic exactly when a = b and R[x]/(p) is isomorphic to R[x]/(q); over a
prime field the latter is a degree comparison, over Q it is a root-existence
test in a number field decided with resultant norms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import MixedFieldsError, ReducibleInputError
from .factor import factor, is_irreducible
from .fields import FieldSpec
from .matrices import ExactMatrix
from .poly import Polynomial
from .smith import ElementaryDivisorData, elementary_divisors
from .structure import MaximalDivisorRecord, difference_data, maximal_divisors

KINDS = ("morita", "derived", "almost_nu_stable_derived")


@dataclass(frozen=True)
class IsoClassProbe:
    base_left: Polynomial
    base_right: Polynomial
    verdict: bool
    method: str


@dataclass(frozen=True)
class RelationResult:
    kind: str
    holds: bool
    witness: Optional[Tuple[Tuple[int, int], ...]]
    reason: Optional[str]


@dataclass(frozen=True)
class EquivalenceVerdict:
    left_blocks: Tuple[MaximalDivisorRecord, ...]
    right_blocks: Tuple[MaximalDivisorRecord, ...]
    morita: RelationResult
    derived: RelationResult
    almost_nu_stable_derived: RelationResult

    @property
    def m_equivalent(self) -> bool:
        return self.morita.holds

    @property
    def d_equivalent(self) -> bool:
        return self.derived.holds

    @property
    def ad_equivalent(self) -> bool:
        return self.almost_nu_stable_derived.holds

    def results(self) -> Tuple[RelationResult, ...]:
        return (self.morita, self.derived, self.almost_nu_stable_derived)


# ---------------------------------------------------------------------------
# Quotient algebra isomorphism
# ---------------------------------------------------------------------------


def quotient_algebras_isomorphic(
    p: Polynomial, a: int, q: Polynomial, b: int, seed: int = 0
) -> bool:
    """Decide R[x]/(p^a) isomorphic to R[x]/(q^b) for irreducible monic p, q."""
    if p.field != q.field:
        raise MixedFieldsError("quotient algebras over different fields")
    if a < 1 or b < 1:
        raise ValueError("exponents must be positive")
    for f in (p, q):
        if not f.is_monic() or not is_irreducible(f, seed=seed):
            raise ReducibleInputError(f"{f} is not monic irreducible")
    if a != b:
        return False
    return base_fields_isomorphic(p, q, seed=seed)


def base_fields_isomorphic(p: Polynomial, q: Polynomial, seed: int = 0) -> bool:
    """Decide R[x]/(p) isomorphic to R[x]/(q) for irreducible p, q (no input checks)."""
    return _probe(p, q, seed).verdict


def _probe(p: Polynomial, q: Polynomial, seed: int = 0) -> IsoClassProbe:
    if p.degree != q.degree:
        return IsoClassProbe(p, q, False, "degree")
    if p == q:
        return IsoClassProbe(p, q, True, "equal")
    if p.field.is_prime_field:
        # Finite fields of equal order are isomorphic.
        return IsoClassProbe(p, q, True, "finite-field-degree")
    if p.degree == 1:
        return IsoClassProbe(p, q, True, "rational-linear")
    verdict = _has_root_in_extension(q, p, seed)
    return IsoClassProbe(p, q, verdict, "rational-root-in-extension")


def _has_root_in_extension(q: Polynomial, p: Polynomial, seed: int) -> bool:
    """Whether q has a root in Q[x]/(p), via a squarefree resultant norm.

    Searches a shift s making N_s(x) = Res_y(p(y), q(x - s*y)) squarefree,
    factors the norm, and certifies candidate factors of degree deg(p) by a
    linear gcd in the extension field.
    """
    dp, dq = int(p.degree), int(q.degree)
    for s in range(0, 4 * dp * dq + 1):
        norm = _shifted_norm(p, q, s)
        if norm.gcd(norm.derivative()).is_constant():
            break
    else:
        raise RuntimeError("no squarefree shift found for the resultant norm")
    for h, _mult in factor(norm, seed=seed):
        if h.degree != dp:
            continue
        if _linear_gcd_certificate(p, q, h, s):
            return True
    return False


def _shifted_norm(p: Polynomial, q: Polynomial, s: int) -> Polynomial:
    """Res_y(p(y), q(x - s*y)) as a polynomial in x, by evaluation/interpolation."""
    field = p.field
    dp, dq = int(p.degree), int(q.degree)
    degree_bound = dp * dq
    points = []
    values = []
    t = 0
    while len(points) <= degree_bound:
        # q(t - s*y) as a polynomial in y.
        inner = Polynomial([t, -s], field)
        qt = q.compose(inner)
        points.append(field.element(t))
        values.append(_resultant(p, qt))
        t += 1
    return _interpolate(points, values, field)


def _resultant(f: Polynomial, g: Polynomial):
    """Resultant of two polynomials over a field, by Euclidean reduction."""
    field = f.field
    res = field.one()
    a, b = f, g
    if a.is_zero() or b.is_zero():
        return field.zero()
    while True:
        if b.degree == 0:
            return res * b.leading_coefficient() ** int(a.degree)
        r = a % b
        if r.is_zero():
            return field.zero()
        da, db, dr = int(a.degree), int(b.degree), int(r.degree)
        sign = field.element(-1) ** (da * db)
        res = res * sign * b.leading_coefficient() ** (da - dr)
        a, b = b, r


def _interpolate(points, values, field: FieldSpec) -> Polynomial:
    acc = Polynomial.zero(field)
    for i, (xi, yi) in enumerate(zip(points, values)):
        if not yi:
            continue
        num = Polynomial.constant(yi, field)
        den = field.one()
        for j, xj in enumerate(points):
            if i == j:
                continue
            num = num * Polynomial([-xj, 1], field)
            den = den * (xi - xj)
        acc = acc + num.scale(den.inverse())
    return acc


# -- arithmetic in the extension field K = Q[x]/(p) -------------------------


def _ext_mul(a: Polynomial, b: Polynomial, p: Polynomial) -> Polynomial:
    return (a * b) % p


def _ext_inv(a: Polynomial, p: Polynomial) -> Polynomial:
    """Inverse modulo the irreducible p by the extended Euclidean algorithm."""
    field = p.field
    r0, r1 = p, a % p
    s0, s1 = Polynomial.zero(field), Polynomial.one(field)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ZeroDivisionError("element is not invertible in the extension")
    return s0.scale(r0.leading_coefficient().inverse()) % p


def _ext_poly_mod(u: List[Polynomial], v: List[Polynomial], p: Polynomial):
    """Remainder of u by v, both polynomials with coefficients in K = Q[x]/(p)."""
    field = p.field
    rem = list(u)
    inv_lead = _ext_inv(v[-1], p)
    while len(rem) >= len(v) and rem:
        c = _ext_mul(rem[-1], inv_lead, p)
        shift = len(rem) - len(v)
        if not c.is_zero():
            for j, vc in enumerate(v):
                rem[shift + j] = rem[shift + j] - _ext_mul(c, vc, p)
        rem.pop()
        while rem and rem[-1].is_zero():
            rem.pop()
    return rem


def _linear_gcd_certificate(p: Polynomial, q: Polynomial, h: Polynomial, s: int) -> bool:
    """Check gcd(q(x), h(x + s*alpha)) over K = Q[x]/(p) has degree one."""
    field = p.field
    zero_k = Polynomial.zero(field)
    alpha = Polynomial.x(field) % p
    salpha = alpha.scale(field.element(s))
    # h(x + s*alpha) in K[x] by Horner (coefficient lists are lowest first).
    result: List[Polynomial] = [zero_k]
    for coeff in reversed(h.coeffs):
        new = [zero_k] * (len(result) + 1)
        for i, rc in enumerate(result):
            new[i + 1] = new[i + 1] + rc
            new[i] = new[i] + _ext_mul(rc, salpha, p)
        new[0] = new[0] + Polynomial.constant(coeff, field) % p
        while len(new) > 1 and new[-1].is_zero():
            new.pop()
        result = new
    hk = result
    qk = [Polynomial.constant(c, field) % p for c in q.coeffs]
    a, b = qk, hk
    while b:
        a, b = b, _ext_poly_mod(a, b, p)
    return len(a) == 2


# ---------------------------------------------------------------------------
# Matching
# ---------------------------------------------------------------------------


def _admissible(
    left: MaximalDivisorRecord,
    right: MaximalDivisorRecord,
    kind: str,
    iso_cache: Dict[Tuple[int, int], bool],
    key: Tuple[int, int],
    seed: int,
) -> bool:
    if key not in iso_cache:
        iso_cache[key] = left.exponent == right.exponent and base_fields_isomorphic(
            left.base, right.base, seed=seed
        )
    if not iso_cache[key]:
        return False
    pl, pr = set(left.power_indices), set(right.power_indices)
    if kind == "morita":
        return pl == pr
    if kind == "derived":
        return (
            difference_data(pl).gap_multiset == difference_data(pr).gap_multiset
        )
    if kind == "almost_nu_stable_derived":
        return pl == pr or pl == set(difference_data(pr).top_deltas)
    raise ValueError(f"unknown equivalence kind {kind!r}")


def _perfect_matching(adjacency: List[List[int]], n_right: int):
    """Maximum bipartite matching by augmenting paths; returns pair list or None."""
    match_right = [-1] * n_right

    def augment(u: int, seen: List[bool]) -> bool:
        for v in adjacency[u]:
            if not seen[v]:
                seen[v] = True
                if match_right[v] == -1 or augment(match_right[v], seen):
                    match_right[v] = u
                    return True
        return False

    size = 0
    for u in range(len(adjacency)):
        if augment(u, [False] * n_right):
            size += 1
    if size != len(adjacency) or size != n_right:
        return None
    pairs = sorted((u, v) for v, u in enumerate(match_right))
    return tuple(pairs)


def decide_from_blocks(
    left: Sequence[MaximalDivisorRecord],
    right: Sequence[MaximalDivisorRecord],
    kind: str,
    seed: int = 0,
    iso_cache: Optional[Dict[Tuple[int, int], bool]] = None,
) -> RelationResult:
    if kind not in KINDS:
        raise ValueError(f"unknown equivalence kind {kind!r}")
    if len(left) != len(right):
        return RelationResult(
            kind,
            False,
            None,
            f"block counts differ ({len(left)} vs {len(right)})",
        )
    cache = iso_cache if iso_cache is not None else {}
    adjacency = []
    for i, lrec in enumerate(left):
        row = [
            j
            for j, rrec in enumerate(right)
            if _admissible(lrec, rrec, kind, cache, (i, j), seed)
        ]
        if not row:
            return RelationResult(
                kind,
                False,
                None,
                f"maximal divisor {lrec.divisor()} admits no partner",
            )
        adjacency.append(row)
    pairs = _perfect_matching(adjacency, len(right))
    if pairs is None:
        return RelationResult(
            kind, False, None, "no perfect matching between maximal divisors"
        )
    return RelationResult(kind, True, pairs, None)


def decide_from_divisors(
    data_left: ElementaryDivisorData,
    data_right: ElementaryDivisorData,
    kind: str,
    seed: int = 0,
    iso_cache: Optional[Dict[Tuple[int, int], bool]] = None,
) -> RelationResult:
    if data_left.field != data_right.field:
        raise MixedFieldsError("divisor data over different fields")
    return decide_from_blocks(
        maximal_divisors(data_left),
        maximal_divisors(data_right),
        kind,
        seed=seed,
        iso_cache=iso_cache,
    )


def decide_equivalence(
    c: ExactMatrix, d: ExactMatrix, kind: str, seed: int = 0
) -> RelationResult:
    """Decide one equivalence relation between the commutants of two matrices."""
    if c.field != d.field:
        raise MixedFieldsError("matrices over different fields")
    return decide_from_divisors(
        elementary_divisors(c, seed=seed), elementary_divisors(d, seed=seed), kind,
        seed=seed,
    )


def verdict_from_divisors(
    data_left: ElementaryDivisorData,
    data_right: ElementaryDivisorData,
    seed: int = 0,
) -> EquivalenceVerdict:
    if data_left.field != data_right.field:
        raise MixedFieldsError("divisor data over different fields")
    left = maximal_divisors(data_left)
    right = maximal_divisors(data_right)
    cache: Dict[Tuple[int, int], bool] = {}
    results = {
        kind: decide_from_blocks(left, right, kind, seed=seed, iso_cache=cache)
        for kind in KINDS
    }
    return EquivalenceVerdict(
        left_blocks=left,
        right_blocks=right,
        morita=results["morita"],
        derived=results["derived"],
        almost_nu_stable_derived=results["almost_nu_stable_derived"],
    )


def algebra_equivalence_report(
    c: ExactMatrix, d: ExactMatrix, seed: int = 0
) -> EquivalenceVerdict:
    """Run all three equivalence decisions and package witnesses."""
    if c.field != d.field:
        raise MixedFieldsError("matrices over different fields")
    return verdict_from_divisors(
        elementary_divisors(c, seed=seed), elementary_divisors(d, seed=seed),
        seed=seed,
    )
