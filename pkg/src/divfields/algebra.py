"""Factorization over Q and small-degree Galois group computation.

Factorization follows the classical route: squarefree split, factor mod a
good small prime (distinct-degree then equal-degree), Hensel lift to a
coefficient bound, then recombine subsets of the modular factors.  The
degree ceiling keeps recombination cost bounded.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt

from .errors import (
    NotIrreducible,
    RepeatedRoots,
    UnsupportedDegree,
    ZeroInput,
    ZeroPolynomial,
)
from .intarith import (
    SMALL_PRIMES,
    is_square_rational,
    nth_root_rational,
    squarefree_part as _squarefree_pair,
)
from .poly import UniPoly, pow_mod

FACTOR_DEGREE_CEILING = 24


@dataclass(frozen=True)
class SquareClass:
    """value = squarefree * cofactor^2."""

    squarefree: int
    cofactor: Fraction

    def value(self) -> Fraction:
        return self.squarefree * self.cofactor**2


def squarefree_part(q) -> SquareClass:
    d, c = _squarefree_pair(Fraction(q))
    return SquareClass(d, c)


def is_perfect_power(q, k: int) -> Fraction | None:
    """Exact rational k-th root (k = 2 or 3), or None."""
    return nth_root_rational(Fraction(q), k)


# -- squarefree decomposition over Q ------------------------------------


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun-style decomposition: f = lc * prod(g_i^i) with g_i squarefree."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    out = []
    f = f.monic()
    i = 1
    g = f.gcd(f.derivative())
    w = f // g
    while w.degree > 0:
        y = w.gcd(g)
        part = w // y
        if part.degree > 0:
            out.append((part, i))
        w, g = y, g // y
        i += 1
    return out


# -- factorization mod p -------------------------------------------------


def _ddf(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Distinct-degree split of a squarefree monic f mod p."""
    p = f.modulus
    out = []
    x = UniPoly.x(p)
    h = x
    v = f
    d = 0
    while v.degree > 2 * (d + 1) - 1 and v.degree > 0:
        d += 1
        h = pow_mod(h, p, v)
        g = v.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            v = v // g
            h = h % v
    if v.degree > 0:
        out.append((v, v.degree))
    return out


def _edf(f: UniPoly, d: int, rng: random.Random) -> list[UniPoly]:
    """Split a product of degree-d irreducibles mod odd p."""
    p = f.modulus
    if f.degree == d:
        return [f.monic()]
    e = (p**d - 1) // 2
    while True:
        a = UniPoly([rng.randrange(p) for _ in range(f.degree)], p)
        if a.degree < 1:
            continue
        g = f.gcd(a)
        if 0 < g.degree < f.degree:
            pass
        else:
            b = pow_mod(a, e, f) - UniPoly.const(1, p)
            g = f.gcd(b)
            if not 0 < g.degree < f.degree:
                continue
        return _edf(g, d, rng) + _edf(f // g, d, rng)


def factor_mod_p(f: UniPoly) -> list[UniPoly]:
    """Monic irreducible factors of a squarefree f over F_p (p odd)."""
    rng = random.Random(0xD1F1E1D + f.modulus)
    out = []
    for g, d in _ddf(f.monic()):
        out.extend(_edf(g, d, rng))
    return sorted(out, key=lambda h: (h.degree, h.coeffs))


# -- Hensel lifting -------------------------------------------------------


def _hensel_pair(f: UniPoly, g: UniPoly, h: UniPoly, p: int, k: int):
    """Lift f = g*h from mod p to mod p^k (f, lifted g monic*unit pattern).

    f has integer coefficients, lc(f) invertible mod p; g, h monic mod p with
    lc(f) folded into h.  Returns (g_k, h_k) mod p^k.
    """
    # work with symmetric lifts over Z, reducing mod p^m each round
    fm = f
    gp, hp = g.lift_symmetric(), h.lift_symmetric()
    # Bezout: s*g + t*h = 1 mod p
    s, t = _poly_bezout(g, h)
    sp, tp = s.lift_symmetric(), t.lift_symmetric()
    m = p
    while m < p**k:
        m2 = min(m * m, p**k)
        gm, hm = UniPoly(gp.int_coeffs(), m2), UniPoly(hp.int_coeffs(), m2)
        sm, tm = UniPoly(sp.int_coeffs(), m2), UniPoly(tp.int_coeffs(), m2)
        e = UniPoly(fm.int_coeffs(), m2) - gm * hm
        q, r = (sm * e).divmod(hm)
        gm2 = gm + tm * e + q * gm
        hm2 = hm + r
        b = sm * gm2 + tm * hm2 - UniPoly.const(1, m2)
        c, d = (sm * b).divmod(hm2)
        sm2 = sm - d
        tm2 = tm - tm * b - c * gm2
        gp, hp = gm2.lift_symmetric(), hm2.lift_symmetric()
        sp, tp = sm2.lift_symmetric(), tm2.lift_symmetric()
        m = m2
    return UniPoly(gp.int_coeffs(), p**k), UniPoly(hp.int_coeffs(), p**k)


def _poly_bezout(g: UniPoly, h: UniPoly) -> tuple[UniPoly, UniPoly]:
    """s, t with s*g + t*h = 1 over F_p."""
    p = g.modulus
    r0, r1 = g, h
    s0, s1 = UniPoly.const(1, p), UniPoly([], p)
    t0, t1 = UniPoly([], p), UniPoly.const(1, p)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = pow(int(r0.coeffs[0]), -1, p)
    return s0.scale(inv), t0.scale(inv)


def _hensel_tree(f: UniPoly, factors: list[UniPoly], p: int, k: int) -> list[UniPoly]:
    """Lift monic factorization of f (mod p) to mod p^k, lc(f) on the right."""
    if len(factors) == 1:
        return [UniPoly(f.int_coeffs(), p**k).monic()]
    half = len(factors) // 2
    g = UniPoly.const(1, p)
    for fac in factors[:half]:
        g = g * fac
    h = UniPoly.const(int(f.lc), p)
    for fac in factors[half:]:
        h = h * fac
    gk, hk = _hensel_pair(f, g, h, p, k)
    # recurse: gk is monic; hk carries the leading coefficient
    left = _hensel_tree_monic(gk, factors[:half], p, k)
    right = _hensel_tree(hk.lift_symmetric(), factors[half:], p, k)
    return left + right


def _hensel_tree_monic(fk: UniPoly, factors: list[UniPoly], p: int, k: int):
    if len(factors) == 1:
        return [fk.monic()]
    f = fk.lift_symmetric()
    return _hensel_tree(f, factors, p, k)


# -- Zassenhaus recombination ---------------------------------------------


def _pick_prime(f: UniPoly) -> tuple[int, list[UniPoly]]:
    """Smallest odd primes where f stays squarefree; fewest modular factors."""
    best = None
    found = 0
    lc = abs(f.lc)
    for p in SMALL_PRIMES[1:]:
        if lc % p == 0:
            continue
        fp = UniPoly(f.int_coeffs(), p)
        if fp.degree != f.degree or not fp.squarefree():
            continue
        facs = factor_mod_p(fp)
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        found += 1
        if found >= 4 or len(facs) == 1:
            break
    if best is None:
        raise ArithmeticError("no good factorization prime found")
    return best


def _factor_squarefree_primitive(f: UniPoly) -> list[UniPoly]:
    """Irreducible factors of a squarefree primitive integer polynomial."""
    n = f.degree
    if n == 1:
        return [f]
    p, modular = _pick_prime(f)
    if len(modular) == 1:
        return [f]
    # Landau-Mignotte style bound on factor coefficients (times lc)
    height = f.max_norm()
    lc = abs(int(f.lc))
    bound = (1 << (n + 2)) * (isqrt(n + 1) + 1) * height * lc
    k = 1
    while p**k < 2 * bound + 1:
        k += 1
    lifted = _hensel_tree(f, modular, p, k)
    pk = p**k
    result = []
    remaining = f
    pool = list(lifted)
    use = 1
    while 2 * use <= len(pool):
        found = True
        while found:
            found = False
            from itertools import combinations

            for combo in combinations(range(len(pool)), use):
                cand = UniPoly.const(int(remaining.lc), pk)
                for i in combo:
                    cand = cand * pool[i]
                cand_z = cand.lift_symmetric().primitive()
                q, r = remaining.divmod(cand_z)
                if r.is_zero():
                    result.append(cand_z)
                    remaining = q.primitive()
                    pool = [g for i, g in enumerate(pool) if i not in combo]
                    found = True
                    break
        use += 1
    if remaining.degree > 0:
        result.append(remaining)
    return result


def factor_over_Q(f: UniPoly):
    """Factor f in Q[x]: returns (content, [(irreducible primitive, mult)]).

    Factors are primitive integer polynomials with positive leading
    coefficient, ordered by degree then coefficient tuple.  content * product
    of factors^mult == f exactly.
    """
    if f.modulus is not None:
        raise ValueError("factor_over_Q expects rational coefficients")
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree > FACTOR_DEGREE_CEILING:
        raise UnsupportedDegree(f"degree {f.degree} > {FACTOR_DEGREE_CEILING}")
    content, prim = f.content_and_primitive()
    result: list[tuple[UniPoly, int]] = []
    for part, mult in squarefree_decomposition(prim):
        ppart = part.primitive()
        # pull off x^m
        low = 0
        while ppart.coeffs and ppart.coeffs[0] == 0:
            ppart = UniPoly(ppart.coeffs[1:])
            low += 1
        if low:
            result.append((UniPoly.x(), mult))
        if ppart.degree >= 1:
            for g in _factor_squarefree_primitive(ppart):
                result.append((g, mult))
    result.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    # recover exact content so that content * prod == f
    prod = UniPoly.const(1)
    for g, m in result:
        prod = prod * g**m
    content = (f.coeffs[-1]) / prod.coeffs[-1]
    return content, result


def is_irreducible(f: UniPoly) -> bool:
    _, facs = factor_over_Q(f)
    return len(facs) == 1 and facs[0][1] == 1 and facs[0][0].degree == f.degree


# -- rational roots --------------------------------------------------------


def _rational_reconstruct(c: int, m: int, num_bound: int, den_bound: int):
    """u/v with u = c*v mod m, |u| <= num_bound, 0 < v <= den_bound."""
    r0, r1 = m, c % m
    t0, t1 = 0, 1
    while r1 > num_bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > den_bound or gcd(r1, abs(t1)) != 1:
        return None
    if t1 < 0:
        return -r1, -t1
    return r1, t1


def _roots_of_squarefree_int(f: UniPoly) -> list[Fraction]:
    """Rational roots of a squarefree primitive integer polynomial."""
    if f.degree == 0:
        return []
    if f.degree == 1:
        return [Fraction(-f.coeffs[0], f.coeffs[1])]
    lc = abs(int(f.lc))
    height = f.max_norm()
    ubound = lc + height
    p = None
    for q in SMALL_PRIMES[25:]:  # skip tiny primes: fewer spurious roots
        if lc % q:
            fq = UniPoly(f.int_coeffs(), q)
            if fq.degree == f.degree and fq.squarefree():
                p = q
                break
    if p is None:
        raise ArithmeticError("no good prime for root finding")
    # roots mod p by direct scan
    roots_p = [r for r in range(p) if UniPoly(f.int_coeffs(), p)(r) == 0]
    if not roots_p:
        return []
    target = 2 * ubound * lc + 1
    k = 1
    while p**k < target:
        k *= 2
    # lift each root by Newton iteration
    out = []
    fprime = f.derivative()
    for r in roots_p:
        m = p
        rm = r
        while m < p**k:
            m = min(m * m, p**k)
            fr = f(rm) % m
            d = pow(int(fprime(rm)) % m, -1, m)
            rm = (rm - fr * d) % m
        rec = _rational_reconstruct(int(rm), p**k, ubound, lc)
        if rec is None:
            continue
        cand = Fraction(rec[0], rec[1])
        if f(cand) == 0:
            out.append(cand)
    return sorted(set(out))


def rational_roots(f: UniPoly) -> list[Fraction]:
    """All rational roots with multiplicity, in ascending order."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no well-defined roots")
    out: list[Fraction] = []
    for part, mult in squarefree_decomposition(f):
        ppart = part.primitive()
        if ppart.coeffs and ppart.coeffs[0] == 0:
            out.extend([Fraction(0)] * mult)
            ppart = UniPoly(ppart.coeffs[1:])
        for r in _roots_of_squarefree_int(ppart):
            out.extend([r] * mult)
    return sorted(out)


# -- cubic and quartic Galois groups ---------------------------------------


class CubicGalois(Enum):
    REDUCIBLE_SPLIT = "Reducible_split"
    REDUCIBLE_ONE_ROOT = "Reducible_one_root"
    C3 = "C3"
    S3 = "S3"


class QuarticGalois(Enum):
    C4 = "C4"
    V4 = "V4"
    D4 = "D4"
    A4 = "A4"
    S4 = "S4"


def cubic_discriminant(f: UniPoly) -> Fraction:
    a, b, c, d = f[3], f[2], f[1], f[0]
    return (
        18 * a * b * c * d
        - 4 * b**3 * d
        + b**2 * c**2
        - 4 * a * c**3
        - 27 * a**2 * d**2
    )


def cubic_galois(f: UniPoly) -> CubicGalois:
    """Galois group of the splitting field of a degree-3 polynomial."""
    if f.degree != 3:
        raise ValueError("cubic_galois needs a degree-3 polynomial")
    disc = cubic_discriminant(f)
    if disc == 0:
        raise RepeatedRoots("cubic has a repeated root")
    nroots = len(rational_roots(f))
    if nroots >= 2:
        return CubicGalois.REDUCIBLE_SPLIT
    if nroots == 1:
        return CubicGalois.REDUCIBLE_ONE_ROOT
    return CubicGalois.C3 if is_square_rational(disc) else CubicGalois.S3


def quartic_discriminant_depressed(p: Fraction, q: Fraction, r: Fraction) -> Fraction:
    return (
        16 * p**4 * r
        - 4 * p**3 * q**2
        - 128 * p**2 * r**2
        + 144 * p * q**2 * r
        - 27 * q**4
        + 256 * r**3
    )


def quartic_galois(f: UniPoly) -> QuarticGalois:
    """Galois group of an irreducible quartic.

    The C4-vs-D4 split uses the unique rational root b of the resolvent: the
    group is C4 exactly when (b^2 - 4r) * disc is a square, equivalently when
    the quartic splits into conjugate quadratics over the discriminant field.
    """
    if f.degree != 4:
        raise ValueError("quartic_galois needs a degree-4 polynomial")
    f = f.monic()
    a3 = f[3]
    # depress: x -> x - a3/4
    g = f.compose(UniPoly([-a3 / 4, 1]))
    p, q, r = g[2], g[1], g[0]
    disc = quartic_discriminant_depressed(p, q, r)
    if disc == 0:
        raise RepeatedRoots("quartic has a repeated root")
    if not is_irreducible(f):
        raise NotIrreducible("quartic_galois needs an irreducible input")
    resolvent = UniPoly([4 * p * r - q**2, -4 * r, -p, 1])
    res_roots = rational_roots(resolvent)
    if len(res_roots) == 0:
        return QuarticGalois.A4 if is_square_rational(disc) else QuarticGalois.S4
    if len(res_roots) == 3:
        return QuarticGalois.V4
    beta = res_roots[0]
    u2 = beta**2 - 4 * r  # (x1*x2 - x3*x4)^2 for the pairing picked by beta
    if q != 0:
        v2 = beta - p  # (x1+x2)^2 ; consistency: (u*v)^2 = q^2
        assert u2 * v2 == q**2
    return QuarticGalois.C4 if is_square_rational(u2 * disc) else QuarticGalois.D4


# -- parametric identity checking ------------------------------------------


def poly_identity_check(lhs, rhs, param_degree_bound: int = 40) -> bool:
    """Exact equality of two one-parameter families of polynomials.

    lhs and rhs are either UniPoly (constant families) or callables mapping a
    rational parameter to a UniPoly.  Each coefficient of the family is a
    polynomial of degree <= param_degree_bound in the parameter, so agreement
    at param_degree_bound + 1 distinct values is agreement identically.
    """
    if isinstance(lhs, UniPoly) and isinstance(rhs, UniPoly):
        return lhs == rhs
    lf = (lambda s, _p=lhs: _p) if isinstance(lhs, UniPoly) else lhs
    rf = (lambda s, _p=rhs: _p) if isinstance(rhs, UniPoly) else rhs
    return all(
        lf(Fraction(s)) == rf(Fraction(s)) for s in range(param_degree_bound + 1)
    )
