"""Exact integer and rational arithmetic helpers.

Everything here is deterministic: the Pollard-Brent factoring walk uses a
fixed sequence of parameters, so repeated runs factor the same integer the
same way.
"""

from fractions import Fraction
from math import gcd, isqrt

from .errors import ZeroInput

# Bases giving a deterministic Miller-Rabin test for n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_SMALL_PRIME_LIMIT = 10_000


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


SMALL_PRIMES = _sieve(_SMALL_PRIME_LIMIT)


def primes_up_to(limit: int) -> list[int]:
    if limit <= _SMALL_PRIME_LIMIT:
        from bisect import bisect_right

        return SMALL_PRIMES[: bisect_right(SMALL_PRIMES, limit)]
    return _sieve(limit)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in SMALL_PRIMES[:50]:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """One nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        y, c, m = seed % n or 1, (seed + 1) % n or 1, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        seed += 1


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; ignores the sign.

    Raises ZeroInput on 0.
    """
    if n == 0:
        raise ZeroInput("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = isqrt(m)
        if root * root == m:
            stack.extend([root, root])
            continue
        d = _pollard_brent(m)
        stack.extend([d, m // d])
    return out


def is_square_int(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def is_square_rational(q: Fraction) -> bool:
    return q >= 0 and is_square_int(q.numerator) and is_square_int(q.denominator)


def sqrt_rational(q: Fraction) -> Fraction | None:
    """Exact square root of a rational, if it exists."""
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def squarefree_part(q: Fraction | int) -> tuple[int, Fraction]:
    """Write a nonzero rational as q = d * c^2 with d a squarefree integer.

    Returns (d, c) with c > 0.
    """
    q = Fraction(q)
    if q == 0:
        raise ZeroInput("0 has no square class")
    n = q.numerator * q.denominator  # same square class as q
    sign = -1 if n < 0 else 1
    d = sign
    c2 = 1
    for p, e in factor_int(n).items():
        if e % 2:
            d *= p
        c2 *= p ** (e // 2)
    cofactor = Fraction(c2) / q.denominator  # q = d * (c2/den)^2
    return d, abs(cofactor)


def squarefree_class_mul(d1: int, d2: int) -> int:
    """Product of two squarefree classes, reduced to a squarefree integer.

    No factoring needed: the common part of the two squarefree integers is a
    perfect square in the product.
    """
    g = gcd(d1, d2)
    return (d1 // g) * (d2 // g)


def nth_root_rational(q: Fraction, k: int) -> Fraction | None:
    """Exact k-th root of a rational, if one exists (k = 2 or 3)."""
    if k == 2:
        return sqrt_rational(Fraction(q))
    if k != 3:
        raise ValueError("only square and cube roots supported")
    q = Fraction(q)

    def icbrt(m: int) -> int | None:
        if m < 0:
            r = icbrt(-m)
            return None if r is None else -r
        r = round(m ** (1 / 3)) if m < (1 << 50) else _icbrt_big(m)
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand**3 == m:
                return cand
        return None

    a = icbrt(q.numerator)
    b = icbrt(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def _icbrt_big(m: int) -> int:
    lo, hi = 0, 1 << ((m.bit_length() + 2) // 3 + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**3 <= m:
            lo = mid
        else:
            hi = mid - 1
    return lo
