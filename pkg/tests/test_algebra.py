import random
from fractions import Fraction

import pytest
import sympy

from divfields.algebra import (
    CubicGalois,
    QuarticGalois,
    cubic_galois,
    factor_over_Q,
    is_irreducible,
    is_perfect_power,
    poly_identity_check,
    quartic_galois,
    rational_roots,
    squarefree_part,
)
from divfields.errors import RepeatedRoots, UnsupportedDegree, ZeroInput, ZeroPolynomial
from divfields.intarith import factor_int, is_prime
from divfields.poly import UniPoly, resultant

F = Fraction


def P(*coeffs_high_first):
    """Polynomial from highest-degree-first integer/rational coefficients."""
    return UniPoly(list(reversed([F(c) for c in coeffs_high_first])))


# -- integer layer ----------------------------------------------------------


def test_is_prime_small():
    assert [p for p in range(50) if is_prime(p)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    ]


def test_factor_int_roundtrip():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(2, 10**12)
        f = factor_int(n)
        prod = 1
        for p, e in f.items():
            assert is_prime(p)
            prod *= p**e
        assert prod == n


def test_factor_int_large_composite():
    n = (10**9 + 7) * (10**9 + 9) * 2**5 * 3
    f = factor_int(n)
    assert f == {2: 5, 3: 1, 10**9 + 7: 1, 10**9 + 9: 1}


def test_squarefree_part_examples():
    assert (squarefree_part(12).squarefree, squarefree_part(12).cofactor) == (3, F(2))
    assert (squarefree_part(-50).squarefree, squarefree_part(-50).cofactor) == (-2, F(5))
    sc = squarefree_part(F(49, 9))
    assert (sc.squarefree, sc.cofactor) == (1, F(7, 3))
    with pytest.raises(ZeroInput):
        squarefree_part(0)


def test_squarefree_part_reconstruction_bulk():
    rng = random.Random(123)
    for _ in range(10_000):
        q = F(rng.randrange(-4000, 4000) or 1, rng.randrange(1, 4000))
        sc = squarefree_part(q)
        assert sc.value() == q
        for p, e in factor_int(sc.squarefree).items():
            assert e == 1


def test_is_perfect_power_examples():
    assert is_perfect_power(16, 3) is None
    assert is_perfect_power(F(1, 8), 3) == F(1, 2)
    assert is_perfect_power(F(9, 4), 2) == F(3, 2)
    assert is_perfect_power(-8, 3) == -2
    assert is_perfect_power(-4, 2) is None


# -- polynomial layer ---------------------------------------------------------


def test_poly_arithmetic_and_division():
    f = P(1, 0, -2, 1)  # x^3 - 2x + 1
    g = P(1, -1)  # x - 1
    q, r = f.divmod(g)
    assert r.is_zero()
    assert q == P(1, 1, -1)
    assert q * g == f


def test_poly_gcd():
    f = P(1, -1) * P(1, 2) ** 2
    g = P(1, 2) * P(1, 5)
    assert f.gcd(g) == P(1, 2)


def test_resultant_matches_sympy():
    rng = random.Random(5)
    x = sympy.symbols("x")
    for _ in range(20):
        f = UniPoly([rng.randrange(-5, 6) for _ in range(5)] + [1])
        g = UniPoly([rng.randrange(-5, 6) for _ in range(4)] + [1])
        mine = resultant(f, g)
        theirs = sympy.resultant(
            sympy.Poly(list(reversed(f.int_coeffs())), x),
            sympy.Poly(list(reversed(g.int_coeffs())), x),
        )
        assert mine == theirs


# -- factorization ------------------------------------------------------------


def test_factor_examples():
    content, facs = factor_over_Q(P(1, 0, -1))  # x^2 - 1
    assert content == 1
    assert [f.coeffs for f, m in facs] == [((-1, 1)), ((1, 1))] or [
        tuple(f.int_coeffs()) for f, m in facs
    ] == [(-1, 1), (1, 1)]

    # x(x^3 + 64) = x^4 + 64x -> {x, x+4, x^2-4x+16}
    content, facs = factor_over_Q(P(1, 0, 0, 64, 0))
    got = sorted(tuple(f.int_coeffs()) for f, m in facs)
    assert got == sorted([(0, 1), (4, 1), (16, -4, 1)])

    assert is_irreducible(P(1, -4, -2, -4, 1))


def test_factor_multiplicity_and_content():
    f = P(2, -2) * P(1, 1) ** 3  # 2(x-1)(x+1)^3
    content, facs = factor_over_Q(f)
    as_set = {(tuple(g.int_coeffs()), m) for g, m in facs}
    assert as_set == {((-1, 1), 1), ((1, 1), 3)}
    prod = UniPoly([content])
    for g, m in facs:
        prod = prod * g**m
    assert prod == f


def test_factor_degree_ceiling():
    with pytest.raises(UnsupportedDegree):
        factor_over_Q(UniPoly([1] + [0] * 24 + [1]))
    with pytest.raises(ZeroPolynomial):
        factor_over_Q(UniPoly([]))


def test_factor_matches_sympy_oracle():
    rng = random.Random(99)
    x = sympy.symbols("x")
    for _ in range(100):
        deg = rng.randrange(1, 11)
        coeffs = [rng.randrange(-20, 21) for _ in range(deg)] + [
            rng.randrange(1, 21)
        ]
        f = UniPoly(coeffs)
        content, facs = factor_over_Q(f)
        sk, sfacs = sympy.factor_list(sympy.Poly(list(reversed(coeffs)), x))
        oracle = sorted(
            (tuple(int(c) for c in reversed(g.all_coeffs())), m)
            for g, m in sfacs
        )
        mine = sorted((tuple(g.int_coeffs()), m) for g, m in facs)
        # normalize oracle factors to positive leading coefficient
        normed = []
        for cs, m in oracle:
            if cs[-1] < 0:
                cs = tuple(-c for c in cs)
            normed.append((cs, m))
        assert sorted(normed) == mine


def test_rational_roots_examples():
    assert rational_roots(P(1, 0, 0, 8, 0)) == [F(-2), F(0)]
    assert rational_roots(P(1, 0, 0, 1)) == [F(-1)]
    assert rational_roots(P(1, 0, 1)) == []
    # multiplicity, ascending
    f = P(1, -1) ** 2 * P(3, 1)
    assert rational_roots(f) == [F(-1, 3), F(1), F(1)]


def test_rational_roots_big_coefficients():
    # roots survive large coefficients (mod-p lifting, not divisor search)
    r1, r2 = F(12345, 7), F(-999, 13)
    f = UniPoly.from_roots([r1, r2]) * P(1, 0, 0, 0, 1, 1)
    f = f.scale(91)
    assert set(rational_roots(f)) == {r1, r2}


# -- cubic / quartic Galois groups -------------------------------------------


def test_cubic_galois_examples():
    assert cubic_galois(P(1, 0, -3, -1)) == CubicGalois.C3
    assert cubic_galois(P(1, 0, -1, 0)) == CubicGalois.REDUCIBLE_SPLIT
    assert cubic_galois(P(1, 0, 0, -2)) == CubicGalois.S3
    assert cubic_galois(P(1, 0, 0, 1)) == CubicGalois.REDUCIBLE_ONE_ROOT
    with pytest.raises(RepeatedRoots):
        cubic_galois(P(1, -2, 1, 0))


def test_quartic_galois_examples():
    assert quartic_galois(P(1, -4, -2, -4, 1)) == QuarticGalois.D4
    assert quartic_galois(P(1, 1, 1, 1, 1)) == QuarticGalois.C4
    assert quartic_galois(P(1, 0, 0, 0, 1)) == QuarticGalois.V4


def test_quartic_galois_more_known():
    assert quartic_galois(P(1, 0, 0, 0, -2)) == QuarticGalois.D4
    assert quartic_galois(P(1, 0, 4, 0, 2)) == QuarticGalois.C4
    assert quartic_galois(P(1, 0, -10, 0, 1)) == QuarticGalois.V4
    assert quartic_galois(P(1, 0, 0, -1, -1)) == QuarticGalois.S4
    assert quartic_galois(P(1, 0, 0, 8, 12)) == QuarticGalois.A4


def test_quartic_galois_matches_sympy():
    from sympy.polys.numberfields.galoisgroups import galois_group

    x = sympy.symbols("x")
    rng = random.Random(17)
    tried = 0
    while tried < 25:
        coeffs = [rng.randrange(-8, 9) for _ in range(4)] + [1]
        f = UniPoly(coeffs)
        try:
            mine = quartic_galois(f)
        except Exception:
            continue
        g, _ = galois_group(sympy.Poly(list(reversed(coeffs)), x))
        if g.order() == 4:
            oracle = QuarticGalois.C4 if g.is_cyclic else QuarticGalois.V4
        else:
            oracle = {8: QuarticGalois.D4, 12: QuarticGalois.A4, 24: QuarticGalois.S4}[
                g.order()
            ]
        assert oracle == mine, (coeffs, oracle, mine)
        tried += 1


def test_quartic_galois_errors():
    with pytest.raises(NotImplementedError) if False else pytest.raises(Exception):
        quartic_galois(P(1, 0, -1, 0, 0))  # reducible (x^2 factor, repeated)


def test_poly_identity_check():
    # same family written two ways
    lhs = lambda s: UniPoly([s, 0, 1])  # x^2 + s
    rhs = lambda s: UniPoly([s]) + UniPoly([0, 0, 1])
    assert poly_identity_check(lhs, rhs)
    assert not poly_identity_check(lambda s: UniPoly([-s, 0, 1]), lhs)
    assert poly_identity_check(P(1, 0, 2), P(1, 0, 2))
