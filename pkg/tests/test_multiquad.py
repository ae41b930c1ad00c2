import random
from fractions import Fraction

import pytest

from divfields.errors import DepthCapExceeded, ZeroInput
from divfields.intarith import sqrt_rational
from divfields.multiquad import (
    MqElement,
    MqField,
    adjoin_sqrt,
    galois_group,
    is_square_in,
    mq_field,
    rational_square_class,
    sqrt_in,
    subfield_generated_by,
)

F = Fraction


def elem(field, rational=0, **radical_parts):
    """Convenience: elem(K, 3, s0=2) = 3 + 2*sqrt(basis[0])."""
    coords = {frozenset(): F(rational)}
    for key, c in radical_parts.items():
        idx = frozenset(int(ch) for ch in key[1:].split("_"))
        coords[idx] = F(c)
    return MqElement(field, coords)


def test_mq_field_examples():
    assert mq_field([-1, 2]).basis == (-1, 2)
    assert mq_field([-1, 2]).degree == 4
    assert mq_field([2, 8]).basis == (2,)
    assert mq_field([3, 5, 15]).basis == (3, 5)
    assert mq_field([1]).basis == ()
    with pytest.raises(ZeroInput):
        mq_field([0])


def test_mq_field_canonical_for_equal_spans():
    assert mq_field([6, 10]).basis == mq_field([15, 6]).basis == mq_field([10, 15]).basis
    assert mq_field([-2, 2]).basis == (-1, 2)


def test_depth_cap():
    with pytest.raises(DepthCapExceeded):
        mq_field([2, 3, 5, 7, 11, 13, 17])


def test_element_arithmetic_and_inverse():
    K = mq_field([2, 3])
    a = elem(K, 1, s0=1)  # 1 + sqrt2
    b = elem(K, 0, s1=2)  # 2 sqrt3
    prod = a * b
    assert prod == elem(K, 0, s1=2, s0_1=2)  # 2sqrt3 + 2sqrt6
    assert (a * a) == elem(K, 3, s0=2)
    inv = a.inverse()
    assert (a * inv) == K.one()
    assert (b / b) == K.one()
    assert a.norm() == (1 - 2) * (1 - 2)  # (1+s2)(1-s2) squared over the tower


def test_sqrt_in_examples():
    K2 = mq_field([2])
    a = elem(K2, 3, s0=2)  # 3 + 2*sqrt2 = (1+sqrt2)^2
    w = sqrt_in(a)
    assert w is not None and w * w == a
    assert not is_square_in(elem(K2, 0, s0=1))  # sqrt2 is not a square
    Ki = mq_field([-1])
    m1 = Ki.rational(-1)
    wi = sqrt_in(m1)
    assert wi is not None and wi * wi == m1  # witness sqrt(-1)
    with pytest.raises(ZeroInput):
        sqrt_in(K2.zero())


def test_sqrt_roundtrip_random():
    rng = random.Random(42)
    K = mq_field([-1, 2, 5])
    for _ in range(1000):
        coords = {
            frozenset(s): F(rng.randrange(-9, 10), rng.randrange(1, 5))
            for s in [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
            if rng.random() < 0.5
        }
        a = MqElement(K, coords)
        if a.is_zero():
            continue
        sq = a * a
        w = sqrt_in(sq)
        assert w is not None and w * w == sq


def test_is_square_agrees_with_degree2_criterion():
    # independent classical criterion on Q(sqrt d): u + v*sqrt(d) is a square
    # iff u^2 - d v^2 = w^2 in Q and one of (u +- w)/2 is a rational square.
    for d in (-5, -1, 2, 3, 7):
        K = mq_field([d])
        for u_num in range(-6, 7):
            for v_num in range(-6, 7):
                u, v = F(u_num), F(v_num)
                a = elem(K, u, s0=v)
                if a.is_zero():
                    continue
                if v == 0:
                    expected = (sqrt_rational(u) is not None) or (
                        sqrt_rational(u / d) is not None
                    )
                else:
                    expected = False
                    w = sqrt_rational(u * u - d * v * v)
                    if w is not None:
                        for wc in (w, -w):
                            h = sqrt_rational((u + wc) / 2)
                            if h is not None and h != 0 and (v / (2 * h)) ** 2 * d + h * h == u:
                                expected = True
                assert is_square_in(a) == expected, (d, u, v)


def test_rational_square_class_examples():
    K3 = mq_field([3])
    assert rational_square_class(K3.rational(18)) == 2
    # 6*sqrt3 - 9 has no rational square class over Q(sqrt3)
    a = elem(K3, -9, s0=6)
    assert rational_square_class(a) is None
    # 2*sqrt2 over Q(sqrt2): the search comes back empty
    K2 = mq_field([2])
    assert rational_square_class(elem(K2, 0, s0=2)) is None
    # sanity: sqrt2 * (1+sqrt2)^2 has class... (3+2sqrt2)*sqrt2 = 4+3sqrt2
    b = elem(K2, 4, s0=3)
    assert rational_square_class(b) is None  # still a sqrt2-class element
    # 6+4sqrt2 = (2+sqrt2)^2: class 2 collapses to 1 since 2 is a square here
    c = elem(K2, 6, s0=4)
    assert rational_square_class(c) == 1


def test_rational_square_class_bruteforce_oracle():
    # exhaustive small search over Q(sqrt3): compare against brute force on
    # q*(x + y sqrt3)^2 reconstruction
    K = mq_field([3])
    qs = [1, -1, 2, -2, 3, -3, 6, -6]
    rng = random.Random(3)
    for _ in range(40):
        u, v = F(rng.randrange(-8, 9)), F(rng.randrange(-8, 9))
        a = elem(K, u, s0=v)
        if a.is_zero():
            continue
        got = rational_square_class(a)
        brute = None
        for q in sorted(qs, key=abs):
            for xn in range(-8, 9):
                for yn in range(0, 9):
                    for den in (1, 2):
                        x, y = F(xn, den), F(yn, den)
                        if (x * x + 3 * y * y) * q != u:
                            continue
                        if 2 * x * y * q == v:
                            brute = q
                            break
                    if brute:
                        break
                if brute:
                    break
            if brute:
                break
        if brute is not None:
            assert got is not None  # found by the documented search too
            # both classes must differ by a square class of the field
            assert got == brute or is_square_in(K.rational(got * brute))


def test_adjoin_sqrt_examples():
    K3 = mq_field([3])
    r = adjoin_sqrt(K3, -1)
    assert r.kind == "extended" and r.field.basis == (-1, 3)
    K2 = mq_field([2])
    assert adjoin_sqrt(K2, elem(K2, 3, s0=2)).kind == "unchanged"
    assert adjoin_sqrt(K3, elem(K3, -9, s0=6)).kind == "not_polyquadratic"


def test_subfield_generated_by():
    K = mq_field([3, 5])
    s15 = elem(K, 0, s0_1=1)
    sub, grp = subfield_generated_by([s15])
    assert sub.basis == (15,)
    assert len(grp) == 2
    full, grp4 = subfield_generated_by([elem(K, 0, s0=1), elem(K, 0, s1=1)])
    assert full.basis == (3, 5) and len(grp4) == 4
    triv, grp1 = subfield_generated_by([K.rational(7)])
    assert triv.basis == () and len(grp1) == 1


def test_subfield_monotone_and_idempotent():
    K = mq_field([-1, 2, 7])
    e1 = elem(K, 1, s0=1)
    e2 = elem(K, 0, s1_2=3)
    f1, _ = subfield_generated_by([e1])
    f12, _ = subfield_generated_by([e1, e2])
    assert f12.contains_field(f1)
    again, _ = subfield_generated_by([e1, e1])
    assert again == f1


def test_galois_group_size():
    for gens in ([], [2], [2, 3], [-1, 2, 5]):
        K = mq_field(gens)
        assert len(galois_group(K)) == K.degree


def test_embed():
    K = mq_field([2])
    L = mq_field([2, 3])
    a = MqElement(K, {frozenset(): F(1), frozenset([0]): F(2)})
    b = L.embed(a)
    assert b.coords[frozenset([0])] == 2  # sqrt2 is generator 0 of L too
    # embedding respects arithmetic
    assert L.embed(a * a) == b * b
    # non-basis class: sqrt(12) = 2 sqrt(3) in L
    s12 = L.sqrt_of_class(12)
    assert s12 * s12 == L.rational(12)
