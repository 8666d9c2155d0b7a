"""Factorization of univariate polynomials into monic irreducibles.

Over F_p: squarefree decomposition (with p-th-root extraction), distinct-degree
factorization, then seeded equal-degree splitting.  Over Q: Yun squarefree
decomposition, factorization modulo a good prime, Hensel lifting past the
Mignotte coefficient bound, and subset recombination.  x^m - 1 gets a
dedicated cyclotomic path that never touches the rational recombination.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .errors import DegreeCeilingError
from .fields import RATIONALS, FieldElement, FieldSpec
from .poly import Polynomial

RATIONAL_DEGREE_CEILING = 64


@dataclass(frozen=True)
class Factorization:
    """unit * product(factor^multiplicity) over pairwise distinct monic irreducibles."""

    unit: FieldElement
    factors: Tuple[Tuple[Polynomial, int], ...]

    def expand(self) -> Polynomial:
        field = self.unit.field
        out = Polynomial.constant(self.unit, field)
        for base, mult in self.factors:
            out = out * base**mult
        return out

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def _canonical(unit: FieldElement, pairs: Dict[Polynomial, int]) -> Factorization:
    ordered = sorted(pairs.items(), key=lambda it: it[0].sort_key())
    return Factorization(unit, tuple((b, m) for b, m in ordered))


# ---------------------------------------------------------------------------
# Squarefree decomposition
# ---------------------------------------------------------------------------


def squarefree_decomposition(f: Polynomial) -> List[Tuple[Polynomial, int]]:
    """Write f as unit * prod g_i^{e_i} with the g_i monic, squarefree, coprime.

    Output is sorted by (multiplicity, polynomial); constants yield [].
    """
    if f.is_zero():
        raise ValueError("cannot squarefree-decompose the zero polynomial")
    if f.is_constant():
        return []
    f = f.monic()
    if f.field.characteristic == 0:
        parts = _squarefree_char0(f)
    else:
        parts = _squarefree_charp(f)
    parts.sort(key=lambda gm: (gm[1], gm[0].sort_key()))
    return parts


def _squarefree_char0(f: Polynomial) -> List[Tuple[Polynomial, int]]:
    # Yun's algorithm.
    out = []
    df = f.derivative()
    g = f.gcd(df)
    c = f.exact_div(g)
    d = df.exact_div(g) - c.derivative()
    i = 1
    while not c.is_constant():
        a = c.gcd(d) if not d.is_zero() else c.monic()
        if not a.is_constant():
            out.append((a.monic(), i))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        i += 1
    return out


def _squarefree_charp(f: Polynomial) -> List[Tuple[Polynomial, int]]:
    p = f.field.characteristic
    df = f.derivative()
    out: List[Tuple[Polynomial, int]] = []
    if df.is_zero():
        # f is a p-th power; coefficient p-th roots are trivial over F_p.
        for g, m in _squarefree_charp(_pth_root(f)):
            out.append((g, p * m))
        return out
    c = f.gcd(df)
    w = f.exact_div(c)
    i = 1
    while not w.is_one():
        y = w.gcd(c)
        z = w.exact_div(y)
        if not z.is_constant():
            out.append((z.monic(), i))
        w = y
        c = c.exact_div(y)
        i += 1
    if not c.is_one():
        for g, m in _squarefree_charp(_pth_root(c)):
            out.append((g, p * m))
    return out


def _pth_root(f: Polynomial) -> Polynomial:
    p = f.field.characteristic
    coeffs = []
    for k in range(0, len(f.coeffs), p):
        coeffs.append(f.coeffs[k])
    for k, c in enumerate(f.coeffs):
        if k % p and c:
            raise ValueError("polynomial is not a p-th power")
    return Polynomial(coeffs, f.field)


# ---------------------------------------------------------------------------
# Factorization over F_p
# ---------------------------------------------------------------------------


def _distinct_degree(f: Polynomial) -> List[Tuple[Polynomial, int]]:
    """Split monic squarefree f into (product of irreducibles of degree d, d)."""
    p = f.field.characteristic
    out = []
    g = f
    h = Polynomial.x(f.field) % g
    d = 0
    while g.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(p, g)
        common = (h - Polynomial.x(f.field)).gcd(g) if not (h - Polynomial.x(f.field)).is_zero() else g
        if not common.is_constant():
            out.append((common.monic(), d))
            g = g.exact_div(common)
            h = h % g
    if g.degree >= 1:
        out.append((g.monic(), int(g.degree)))
    return out


def _random_poly(field: FieldSpec, degree_bound: int, rng: random.Random) -> Polynomial:
    p = field.characteristic
    coeffs = [rng.randrange(p) for _ in range(degree_bound)]
    return Polynomial(coeffs, field)


def _equal_degree(f: Polynomial, d: int, rng: random.Random) -> List[Polynomial]:
    """Split a monic product of distinct irreducibles, all of degree d."""
    if f.degree == d:
        return [f.monic()]
    p = f.field.characteristic
    n = int(f.degree)
    one = Polynomial.one(f.field)
    while True:
        a = _random_poly(f.field, n, rng)
        if a.is_constant():
            continue
        g = a.gcd(f)
        if not g.is_constant() and g.degree < f.degree:
            break
        if p == 2:
            # Trace map over F_2: a + a^2 + ... + a^(2^(d-1)) mod f.
            t = a
            b = a
            for _ in range(d - 1):
                b = (b * b) % f
                t = t + b
            t = t % f
            if t.is_zero():
                continue
            g = t.gcd(f)
        else:
            b = a.pow_mod((p**d - 1) // 2, f)
            g = (b - one).gcd(f) if not (b - one).is_zero() else f
        if not g.is_constant() and g.degree < f.degree:
            break
    return _equal_degree(g.monic(), d, rng) + _equal_degree(f.exact_div(g).monic(), d, rng)


def _factor_prime_field(f: Polynomial, rng: random.Random) -> Dict[Polynomial, int]:
    pairs: Dict[Polynomial, int] = {}
    for g, mult in squarefree_decomposition(f):
        for prod, d in _distinct_degree(g):
            for irr in _equal_degree(prod, d, rng):
                pairs[irr] = pairs.get(irr, 0) + mult
    return pairs


# ---------------------------------------------------------------------------
# Integer polynomial helpers (dense int lists, lowest degree first)
# ---------------------------------------------------------------------------


def _z_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _z_mul(a: List[int], b: List[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _z_primitive(a: List[int]) -> List[int]:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _z_divmod_exact(a: List[int], b: List[int]) -> Optional[List[int]]:
    """Quotient of a by b in Z[x], or None when b does not divide a."""
    if not b:
        raise ZeroDivisionError("integer polynomial division by zero")
    rem = list(a)
    if len(rem) < len(b):
        return None if _z_trim(rem) else []
    lead = b[-1]
    quo = [0] * (len(rem) - len(b) + 1)
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + len(b) - 1]
        if c % lead:
            return None
        q = c // lead
        quo[i] = q
        if q:
            for j, y in enumerate(b):
                rem[i + j] -= q * y
    return quo if not _z_trim(rem) else None


def _pm_mul(a: List[int], b: List[int], m: int) -> List[int]:
    return _z_trim([c % m for c in _z_mul(a, b)])


def _pm_add(a: List[int], b: List[int], m: int) -> List[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _z_trim([c % m for c in out])


def _pm_sub(a: List[int], b: List[int], m: int) -> List[int]:
    return _pm_add(a, [-c for c in b], m)


def _pm_divmod(a: List[int], b: List[int], m: int) -> Tuple[List[int], List[int]]:
    """Division mod m; the divisor's leading coefficient must be invertible."""
    inv = pow(b[-1] % m, -1, m)
    rem = [c % m for c in a]
    if len(rem) < len(b):
        return [], _z_trim(rem)
    quo = [0] * (len(rem) - len(b) + 1)
    for i in range(len(quo) - 1, -1, -1):
        q = rem[i + len(b) - 1] * inv % m
        quo[i] = q
        if q:
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - q * y) % m
    return _z_trim(quo), _z_trim(rem[: len(b) - 1])


def _fp_gcdext(a: List[int], b: List[int], p: int) -> Tuple[List[int], List[int], List[int]]:
    """Extended Euclid over F_p: returns monic g and (s, t) with s*a + t*b = g."""
    r0, r1 = [c % p for c in a], [c % p for c in b]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    r0, r1 = _z_trim(r0), _z_trim(r1)
    while r1:
        q, r = _pm_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _pm_sub(s0, _pm_mul(q, s1, p), p)
        t0, t1 = t1, _pm_sub(t0, _pm_mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    scale = lambda u: _z_trim([c * inv % p for c in u])
    return scale(r0), scale(s0), scale(t0)


def _hensel_step(m: int, f: List[int], g: List[int], h: List[int],
                 s: List[int], t: List[int]):
    """One quadratic Hensel step: lift f = g*h (mod m) to mod m^2; h stays monic."""
    mm = m * m
    e = _pm_sub([c % mm for c in f], _pm_mul(g, h, mm), mm)
    q, r = _pm_divmod(_pm_mul(s, e, mm), h, mm)
    g1 = _pm_add(_pm_add(g, _pm_mul(t, e, mm), mm), _pm_mul(q, g, mm), mm)
    h1 = _pm_add(h, r, mm)
    b = _pm_sub(_pm_add(_pm_mul(s, g1, mm), _pm_mul(t, h1, mm), mm), [1], mm)
    c, d = _pm_divmod(_pm_mul(s, b, mm), h1, mm)
    s1 = _pm_sub(s, d, mm)
    t1 = _pm_sub(_pm_sub(t, _pm_mul(t, b, mm), mm), _pm_mul(c, g1, mm), mm)
    return g1, h1, s1, t1


def _hensel_lift_pair(f: List[int], g: List[int], h: List[int], p: int, target: int):
    """Lift f = g*h (mod p), h monic, to the modulus `target` (a power of p)."""
    _, s, t = _fp_gcdext(g, h, p)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m *= m
    return [c % target for c in _z_trim(g)], [c % target for c in _z_trim(h)]


def _hensel_multilift(f: List[int], facs: List[List[int]], p: int, target: int) -> List[List[int]]:
    """Lift f = lc(f) * prod(facs) (mod p), facs monic and coprime, to mod target."""
    if len(facs) == 1:
        inv = pow(f[-1] % target, -1, target)
        out = [c * inv % target for c in f]
        out[-1] = 1
        return [_z_trim(out)]
    k = len(facs) // 2
    g0 = [f[-1] % p]
    for fac in facs[:k]:
        g0 = _pm_mul(g0, fac, p)
    h0 = [1]
    for fac in facs[k:]:
        h0 = _pm_mul(h0, fac, p)
    g, h = _hensel_lift_pair(f, g0, h0, p, target)
    return _hensel_multilift(g, facs[:k], p, target) + _hensel_multilift(h, facs[k:], p, target)


# ---------------------------------------------------------------------------
# Factorization over Q (Zassenhaus)
# ---------------------------------------------------------------------------


def _to_primitive_int(f: Polynomial) -> List[int]:
    """Primitive integer image of a rational polynomial, positive leading coefficient."""
    den = 1
    for c in f.coeffs:
        den = den * c.value.denominator // math.gcd(den, c.value.denominator)
    ints = [int(c.value * den) for c in f.coeffs]
    return _z_primitive(ints)


def _from_int_monic(coeffs: List[int], field: FieldSpec) -> Polynomial:
    lead = coeffs[-1]
    return Polynomial([Fraction(c, lead) for c in coeffs], field)


_SMALL_PRIMES = (
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
)


def _factor_squarefree_int(f: List[int], rng: random.Random) -> List[List[int]]:
    """Factor a primitive squarefree integer polynomial into primitive irreducibles."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    lc = f[-1]
    chosen = None
    for p in _SMALL_PRIMES:
        if lc % p == 0:
            continue
        field = FieldSpec(p)
        fp = Polynomial(f, field)
        dfp = fp.derivative()
        if dfp.is_zero() or not fp.gcd(dfp).is_constant():
            continue
        chosen = (p, fp)
        break
    if chosen is None:
        raise RuntimeError("no good reduction prime found")
    p, fp = chosen
    modular = sorted(
        _factor_prime_field(fp.monic(), rng), key=lambda g: g.sort_key()
    )
    if len(modular) == 1:
        return [f]
    # Mignotte-style bound on the coefficients of lc(f)-scaled true factors.
    norm = math.isqrt(sum(c * c for c in f)) + 1
    bound = 2 * (2**n) * norm * abs(lc)
    target = p
    while target <= bound:
        target *= p
    lifted = _hensel_multilift(f, [[c.value for c in g.coeffs] for g in modular],
                               p, target)

    def sym(c: int) -> int:
        c %= target
        return c - target if c > target // 2 else c

    out: List[List[int]] = []
    remaining = f
    indices = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(indices):
        found = False
        for subset in itertools.combinations(indices, size):
            cand = [remaining[-1] % target]
            for i in subset:
                cand = _pm_mul(cand, lifted[i], target)
            cand = _z_primitive([sym(c) for c in cand])
            quo = _z_divmod_exact(remaining, cand)
            if quo is not None:
                out.append(cand)
                remaining = _z_primitive(quo)
                indices = [i for i in indices if i not in subset]
                found = True
                break
        if not found:
            size += 1
    if len(remaining) > 1:
        out.append(remaining)
    return out


def _factor_rationals(f: Polynomial, rng: random.Random) -> Dict[Polynomial, int]:
    if f.degree > RATIONAL_DEGREE_CEILING:
        raise DegreeCeilingError(
            f"degree {int(f.degree)} exceeds the rational factorization ceiling "
            f"{RATIONAL_DEGREE_CEILING}"
        )
    pairs: Dict[Polynomial, int] = {}
    for g, mult in squarefree_decomposition(f):
        for part in _factor_squarefree_int(_to_primitive_int(g), rng):
            irr = _from_int_monic(part, f.field)
            pairs[irr] = pairs.get(irr, 0) + mult
    return pairs


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------


def factor(f: Polynomial, seed: int = 0) -> Factorization:
    """Complete factorization into monic irreducibles; deterministic per seed."""
    if f.degree < 1:
        raise ValueError("factor requires a polynomial of degree >= 1")
    rng = random.Random(seed)
    unit = f.leading_coefficient()
    if f.field.characteristic == 0:
        pairs = _factor_rationals(f.monic(), rng)
    else:
        pairs = _factor_prime_field(f.monic(), rng)
    return _canonical(unit, pairs)


def is_irreducible(f: Polynomial, seed: int = 0) -> bool:
    if f.degree < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if f.degree == 1:
        return True
    fac = factor(f, seed=seed)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1


@lru_cache(maxsize=None)
def _cyclotomic_int(m: int) -> Tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial."""
    f = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            q = _z_divmod_exact(f, list(_cyclotomic_int(d)))
            assert q is not None
            f = q
    return tuple(f)


def cyclotomic(m: int, field: FieldSpec = RATIONALS) -> Polynomial:
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    return Polynomial(list(_cyclotomic_int(m)), field)


def _nu(m: int, p: int) -> Tuple[int, int]:
    s = 0
    while m % p == 0:
        m //= p
        s += 1
    return s, m


@lru_cache(maxsize=None)
def _xm1_coprime_part(m1: int, p: int, seed: int) -> Tuple[Polynomial, ...]:
    """Irreducible factors of the squarefree polynomial x^m1 - 1 over F_p."""
    field = FieldSpec(p)
    base = Polynomial([-1] + [0] * (m1 - 1) + [1], field)
    rng = random.Random(seed)
    pairs = _factor_prime_field(base, rng)
    return tuple(sorted(pairs, key=lambda g: g.sort_key()))


def factor_x_pow_m_minus_1(m: int, field: FieldSpec, seed: int = 0) -> Factorization:
    """Factor x^m - 1.

    Over Q this is the product of the cyclotomic polynomials indexed by the
    divisors of m, each irreducible.  In characteristic p, with m = p^s * m'
    and p coprime to m', it is (x^{m'} - 1)^{p^s}.
    """
    if m < 1:
        raise ValueError("exponent must be a positive integer")
    if field.characteristic == 0:
        pairs = {cyclotomic(d, field): 1 for d in _divisors(m)}
        return _canonical(field.one(), pairs)
    p = field.characteristic
    nu, m1 = _nu(m, p)
    mult = p**nu
    pairs = {g: mult for g in _xm1_coprime_part(m1, p, seed)}
    return _canonical(field.one(), pairs)


def _divisors(m: int) -> List[int]:
    out = [d for d in range(1, m + 1) if m % d == 0]
    return out
