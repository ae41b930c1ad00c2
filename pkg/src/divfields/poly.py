"""Dense univariate polynomials over Q or over Z/mZ.

Coefficients are stored lowest degree first.  A polynomial either has
``modulus=None`` and Fraction coefficients, or a positive integer modulus and
int coefficients reduced into [0, m).  The zero polynomial has an empty
coefficient tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ZeroPolynomial


class UniPoly:
    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs, modulus: int | None = None):
        if modulus is None:
            cs = [Fraction(c) for c in coeffs]
        else:
            cs = [int(c) % modulus for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.modulus = modulus

    # -- basic structure --------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UniPoly)
            and self.modulus == other.modulus
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.modulus))

    def __repr__(self) -> str:
        if self.is_zero():
            return "UniPoly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            t = "x" if i == 1 else f"x^{i}" if i else ""
            cs = "" if (c == 1 and i) else str(c)
            terms.append(cs + ("*" if cs and t else "") + t)
        s = " + ".join(terms).replace("+ -", "- ")
        return s + (f" (mod {self.modulus})" if self.modulus else "")

    def __getitem__(self, i: int):
        zero = Fraction(0) if self.modulus is None else 0
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else zero

    @property
    def lc(self):
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @staticmethod
    def x(modulus: int | None = None) -> UniPoly:
        return UniPoly([0, 1], modulus)

    @staticmethod
    def const(c, modulus: int | None = None) -> UniPoly:
        return UniPoly([c], modulus)

    @staticmethod
    def from_roots(roots, modulus: int | None = None) -> UniPoly:
        f = UniPoly.const(1, modulus)
        for r in roots:
            f = f * UniPoly([-r, 1], modulus)
        return f

    def _check(self, other: UniPoly):
        if self.modulus != other.modulus:
            raise ValueError("mixed coefficient rings")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: UniPoly) -> UniPoly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)], self.modulus)

    def __sub__(self, other: UniPoly) -> UniPoly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] - other[i] for i in range(n)], self.modulus)

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs], self.modulus)

    def __mul__(self, other) -> UniPoly:
        if not isinstance(other, UniPoly):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return UniPoly([], self.modulus)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out, self.modulus)

    def __rmul__(self, other) -> UniPoly:
        return self.scale(other)

    def scale(self, c) -> UniPoly:
        return UniPoly([a * c for a in self.coeffs], self.modulus)

    def __pow__(self, e: int) -> UniPoly:
        out = UniPoly.const(1, self.modulus)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        """Euclidean division; requires an invertible leading coefficient."""
        self._check(other)
        if other.is_zero():
            raise ZeroPolynomial("division by zero polynomial")
        m = self.modulus
        if m is None:
            inv_lc = 1 / other.lc
        else:
            inv_lc = pow(int(other.lc), -1, m)
        rem = list(self.coeffs)
        quo = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] * inv_lc
            if m is not None:
                c %= m
            if c == 0:
                continue
            quo[i - d] = c
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] -= c * b
        return UniPoly(quo, m), UniPoly(rem, m)

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[1]

    def divides(self, other: UniPoly) -> bool:
        return other.divmod(self)[1].is_zero()

    # -- calculus / evaluation ----------------------------------------------

    def derivative(self) -> UniPoly:
        return UniPoly(
            [i * c for i, c in enumerate(self.coeffs)][1:], self.modulus
        )

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.modulus is not None and isinstance(acc, int):
            acc %= self.modulus
        return acc

    def compose(self, other: UniPoly) -> UniPoly:
        acc = UniPoly([], self.modulus)
        for c in reversed(self.coeffs):
            acc = acc * other + UniPoly.const(c, self.modulus)
        return acc

    def shift(self, k: int) -> UniPoly:
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UniPoly((0,) * k + self.coeffs, self.modulus)

    # -- gcd ---------------------------------------------------------------

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        if self.modulus is None:
            return self.scale(1 / self.lc)
        return self.scale(pow(int(self.lc), -1, self.modulus))

    def gcd(self, other: UniPoly) -> UniPoly:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree <= 0

    # -- integer normalization (rational coefficients only) -----------------

    def content_and_primitive(self) -> tuple[Fraction, UniPoly]:
        """f = content * primitive with integer primitive part, positive lc."""
        if self.modulus is not None:
            raise ValueError("primitive part is for rational polynomials")
        if self.is_zero():
            return Fraction(0), self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.coeffs:
            num = gcd(num, c.numerator * den // c.denominator)
        if self.lc < 0:
            num = -num
        content = Fraction(num, den)
        prim = UniPoly([c / content for c in self.coeffs])
        return content, prim

    def primitive(self) -> UniPoly:
        return self.content_and_primitive()[1]

    def int_coeffs(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("polynomial is not integral")
        return [c.numerator for c in self.coeffs]

    def reduce_mod(self, m: int) -> UniPoly:
        return UniPoly(self.int_coeffs(), m)

    def lift_symmetric(self) -> UniPoly:
        """Lift a mod-m polynomial to Z with coefficients in (-m/2, m/2]."""
        m = self.modulus
        return UniPoly([c if c <= m // 2 else c - m for c in self.coeffs])

    def max_norm(self) -> int:
        return max((abs(int(c)) for c in self.int_coeffs()), default=0)


def pow_mod(base: UniPoly, e: int, f: UniPoly) -> UniPoly:
    """base^e mod f."""
    out = UniPoly.const(1, base.modulus)
    base = base % f
    while e:
        if e & 1:
            out = out * base % f
        base = base * base % f
        e >>= 1
    return out


def resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Resultant over Q via the Euclidean algorithm."""
    if f.modulus is not None or g.modulus is not None:
        raise ValueError("resultant implemented over Q only")
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    res = Fraction(1)
    a, b = f, g
    while b.degree > 0:
        r = a % b
        if r.is_zero():
            return Fraction(0)
        res *= b.lc ** (a.degree - r.degree)
        if (a.degree * b.degree) % 2:
            res = -res
        a, b = b, r
    return res * b.lc**a.degree
