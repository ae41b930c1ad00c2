"""Exact arithmetic in multiquadratic fields Q(sqrt(d1), ..., sqrt(dk)).

A field is stored as a canonical list of squarefree integer classes that are
independent in Q*/(Q*)^2; an element is a finitely supported map from subsets
of the basis to rational coordinates.  Square testing uses the recursive
quadratic-tower criterion: a = u + v*sqrt(d) is a square iff u^2 - d*v^2 is a
square w^2 one level down and (u+w)/2 or (u-w)/2 is a square there too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import DepthCapExceeded, ZeroInput
from .intarith import factor_int, sqrt_rational, squarefree_class_mul, squarefree_part

MAX_BASIS = 6


def _class_key(d: int) -> tuple[int, int]:
    return (abs(d), 0 if d > 0 else 1)


def _span_of(classes) -> set[int]:
    span = {1}
    for d in classes:
        span |= {squarefree_class_mul(d, s) for s in span}
    return span


class MqField:
    """Canonical multiquadratic field; equality is syntactic equality."""

    __slots__ = ("basis", "_span")

    def __init__(self, basis: tuple[int, ...]):
        # trusted constructor: use mq_field() to canonicalize raw generators
        if len(basis) > MAX_BASIS:
            raise DepthCapExceeded(f"{len(basis)} generators > cap {MAX_BASIS}")
        self.basis = tuple(basis)
        self._span = _span_of(basis)

    @property
    def degree(self) -> int:
        return 1 << len(self.basis)

    def span(self) -> set[int]:
        return set(self._span)

    def __eq__(self, other) -> bool:
        return isinstance(other, MqField) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self) -> str:
        if not self.basis:
            return "Q"
        return "Q(" + ", ".join(f"sqrt({d})" for d in self.basis) + ")"

    # -- elements ---------------------------------------------------------

    def zero(self) -> MqElement:
        return MqElement(self, {})

    def one(self) -> MqElement:
        return self.rational(1)

    def rational(self, q) -> MqElement:
        return MqElement(self, {frozenset(): Fraction(q)})

    def sqrt_generator(self, i: int) -> MqElement:
        """The element sqrt(basis[i])."""
        return MqElement(self, {frozenset([i]): Fraction(1)})

    def sqrt_of_class(self, d: int) -> MqElement:
        """An element s with s^2 = d, for any d in the square-class span."""
        d0, cof = squarefree_part(Fraction(d))
        for subset in _subsets(len(self.basis)):
            prod = 1
            for i in subset:
                prod *= self.basis[i]
            if squarefree_part(prod)[0] == d0:
                g = isqrt(prod // d0)
                return MqElement(
                    self, {frozenset(subset): Fraction(cof) / g}
                )
        raise ValueError(f"{d} is not a square class of {self}")

    def embed(self, elem: MqElement) -> MqElement:
        """Re-express an element of a subfield in this field."""
        if elem.field == self:
            return elem
        out = self.zero()
        for subset, c in elem.coords.items():
            term = self.rational(c)
            for i in subset:
                term = term * self.sqrt_of_class(elem.field.basis[i])
            out = out + term
        return out

    def contains_field(self, other: MqField) -> bool:
        return all(d in self._span for d in other.basis)


def _subsets(k: int):
    for mask in range(1 << k):
        yield tuple(i for i in range(k) if mask >> i & 1)


def mq_field(gens) -> MqField:
    """Canonical field spanned by the square classes of the generators.

    Dependent generators are dropped; the basis is the greedy minimal system
    drawn from the full span, ordered by absolute value then sign, so equal
    spans give syntactically equal fields.
    """
    classes = []
    for g in gens:
        q = Fraction(g)
        if q == 0:
            raise ZeroInput("zero generator")
        d = squarefree_part(q)[0]
        if d != 1:
            classes.append(d)
    span = sorted(_span_of(classes) - {1}, key=_class_key)
    basis: list[int] = []
    have = {1}
    for d in span:
        if d not in have:
            basis.append(d)
            have |= {squarefree_class_mul(d, s) for s in have}
    return MqField(tuple(basis))


class MqElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: MqField, coords: dict):
        self.field = field
        self.coords = {
            frozenset(s): Fraction(c) for s, c in coords.items() if c != 0
        }

    def is_zero(self) -> bool:
        return not self.coords

    def is_rational(self) -> bool:
        return all(not s for s in self.coords)

    def as_rational(self) -> Fraction | None:
        if not self.coords:
            return Fraction(0)
        if self.is_rational():
            return self.coords[frozenset()]
        return None

    def __repr__(self) -> str:
        if not self.coords:
            return "0"
        parts = []
        for s in sorted(self.coords, key=lambda s: sorted(s)):
            c = self.coords[s]
            rad = "*".join(f"sqrt({self.field.basis[i]})" for i in sorted(s))
            parts.append(f"{c}" + (f"*{rad}" if rad else ""))
        return " + ".join(parts)

    def _coerce(self, other) -> MqElement:
        if isinstance(other, MqElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        return self.field.rational(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        return (
            isinstance(other, MqElement)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field, tuple(sorted((tuple(sorted(s)), c) for s, c in self.coords.items()))))

    def __add__(self, other) -> MqElement:
        other = self._coerce(other)
        out = dict(self.coords)
        for s, c in other.coords.items():
            out[s] = out.get(s, Fraction(0)) + c
        return MqElement(self.field, out)

    __radd__ = __add__

    def __neg__(self) -> MqElement:
        return MqElement(self.field, {s: -c for s, c in self.coords.items()})

    def __sub__(self, other) -> MqElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MqElement:
        return self._coerce(other) - self

    def __mul__(self, other) -> MqElement:
        other = self._coerce(other)
        basis = self.field.basis
        out: dict = {}
        for s, c in self.coords.items():
            for t, d in other.coords.items():
                scale = c * d
                for i in s & t:
                    scale *= basis[i]
                key = s ^ t
                out[key] = out.get(key, Fraction(0)) + scale
        return MqElement(self.field, out)

    __rmul__ = __mul__

    def conjugate(self, signs) -> MqElement:
        """Apply the sign character (tuple of +-1 per basis generator)."""
        out = {}
        for s, c in self.coords.items():
            eps = 1
            for i in s:
                eps *= signs[i]
            out[s] = eps * c
        return MqElement(self.field, out)

    def conjugates(self):
        k = len(self.field.basis)
        for mask in range(1 << k):
            signs = tuple(-1 if mask >> i & 1 else 1 for i in range(k))
            yield self.conjugate(signs)

    def norm(self) -> Fraction:
        """Product of all conjugates; always rational."""
        prod = self.field.one()
        for c in self.conjugates():
            prod = prod * c
        r = prod.as_rational()
        assert r is not None, "norm must be rational"
        return r

    def inverse(self) -> MqElement:
        """Multiply by all nontrivial conjugates, divide by the norm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        k = len(self.field.basis)
        prod = self.field.one()
        for mask in range(1, 1 << k):
            signs = tuple(-1 if mask >> i & 1 else 1 for i in range(k))
            prod = prod * self.conjugate(signs)
        n = (self * prod).as_rational()
        assert n is not None and n != 0
        return prod * (Fraction(1) / n)

    def __truediv__(self, other) -> MqElement:
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> MqElement:
        return self._coerce(other) / self

    def __pow__(self, e: int) -> MqElement:
        out = self.field.one()
        base = self
        for _ in range(e):
            out = out * base
        return out


# -- square testing ----------------------------------------------------------


def _split_top(a: MqElement) -> tuple[MqElement, MqElement, MqField, int]:
    """Write a = u + v*sqrt(d) over the subfield without the last generator."""
    basis = a.field.basis
    k = len(basis) - 1
    sub = MqField(basis[:k])
    u_coords, v_coords = {}, {}
    for s, c in a.coords.items():
        if k in s:
            v_coords[s - {k}] = c
        else:
            u_coords[s] = c
    return MqElement(sub, u_coords), MqElement(sub, v_coords), sub, basis[k]


def sqrt_in(a: MqElement) -> MqElement | None:
    """A witness s in the same field with s^2 = a, if a is a square there."""
    if a.is_zero():
        raise ZeroInput("square test on zero")
    s = _sqrt_rec(a)
    if s is not None:
        assert s * s == a
    return s


def is_square_in(a: MqElement) -> bool:
    return sqrt_in(a) is not None


def _sqrt_rec(a: MqElement) -> MqElement | None:
    field = a.field
    if not field.basis:
        r = a.as_rational()
        s = sqrt_rational(r)
        return None if s is None else field.rational(s)
    u, v, sub, d = _split_top(a)
    k = len(sub.basis)
    if v.is_zero():
        s = _sqrt_rec(u) if not u.is_zero() else sub.zero()
        if s is not None:
            return _lift_from_sub(field, s, None)
        t = _sqrt_rec(u * Fraction(1, d))
        if t is not None:
            return _lift_from_sub(field, None, t)
        return None
    nrm = u * u - v * v * d
    if nrm.is_zero():
        return None
    w = _sqrt_rec(nrm)
    if w is None:
        return None
    for wc in (w, -w):
        half = (u + wc) * Fraction(1, 2)
        if half.is_zero():
            continue
        x = _sqrt_rec(half)
        if x is None or x.is_zero():
            continue
        y = v / (x * 2)
        cand = _lift_from_sub(field, x, y)
        if cand * cand == a:
            return cand
    return None


def _lift_from_sub(field: MqField, x: MqElement | None, y: MqElement | None) -> MqElement:
    """Element x + y*sqrt(d_top) of field from subfield parts."""
    k = len(field.basis) - 1
    coords: dict = {}
    if x is not None:
        for s, c in x.coords.items():
            coords[s] = c
    if y is not None:
        for s, c in y.coords.items():
            coords[s | {k}] = c
    return MqElement(field, coords)


# -- rational square classes ---------------------------------------------------


def _support_primes(a: MqElement) -> list[int]:
    """Candidate prime support for a rational square class of a."""
    primes = {2}
    for d in a.field.basis:
        primes |= set(factor_int(d).keys())
    n = a.norm()
    if n != 0:
        primes |= set(factor_int(n.numerator).keys()) if n.numerator else set()
        primes |= set(factor_int(n.denominator).keys())
    return sorted(primes)


def rational_square_class(a: MqElement) -> int | None:
    """Squarefree q with a = q * s^2 for some s in the field, if one exists.

    The search runs over signed squarefree products supported on the primes
    of Norm(a), the basis classes, and 2; at unramified primes s^2 has even
    valuation so no other prime can appear in q.
    """
    if a.is_zero():
        raise ZeroInput("square class of zero")
    primes = _support_primes(a)
    candidates = []
    for mask in range(1 << len(primes)):
        q = 1
        for i, p in enumerate(primes):
            if mask >> i & 1:
                q *= p
        candidates.extend([q, -q])
    candidates.sort(key=_class_key)
    for q in candidates:
        if is_square_in(a * Fraction(1, q)):
            return q
    return None


# -- field extension and subfields ---------------------------------------------


@dataclass(frozen=True)
class AdjoinResult:
    kind: str  # "unchanged" | "extended" | "not_polyquadratic"
    field: MqField | None
    new_class: int | None = None

    @property
    def ok(self) -> bool:
        return self.kind != "not_polyquadratic"


def adjoin_sqrt(field: MqField, a) -> AdjoinResult:
    """Adjoin sqrt(a) to the field, staying multiquadratic or reporting not."""
    if isinstance(a, (int, Fraction)):
        a = field.rational(a)
    elif a.field != field:
        a = field.embed(a)
    if a.is_zero():
        raise ZeroInput("adjoining sqrt(0)")
    q = rational_square_class(a)
    if q is None:
        return AdjoinResult("not_polyquadratic", None)
    if q in field.span():
        return AdjoinResult("unchanged", field)
    return AdjoinResult(
        "extended", mq_field(list(field.basis) + [q]), new_class=q
    )


@dataclass(frozen=True)
class GaloisAction2:
    """Sign flip on each basis square root; the group of these is (Z/2)^k."""

    signs: tuple[int, ...]

    def __call__(self, a: MqElement) -> MqElement:
        return a.conjugate(self.signs)


def galois_group(field: MqField) -> list[GaloisAction2]:
    k = len(field.basis)
    return [
        GaloisAction2(tuple(-1 if m >> i & 1 else 1 for i in range(k)))
        for m in range(1 << k)
    ]


def subfield_generated_by(elems) -> tuple[MqField, list[GaloisAction2]]:
    """Smallest multiquadratic subfield containing the given elements.

    Computed as the fixed field of the stabilizer of all supports: F2 linear
    algebra on the exponent vectors of the supporting subsets.
    """
    elems = list(elems)
    if not elems:
        return MqField(()), galois_group(MqField(()))
    container = elems[0].field
    k = len(container.basis)
    rows: list[int] = []  # bitmask rows over F2
    for e in elems:
        if e.field != container:
            raise ValueError("elements must share one container field")
        for s in e.coords:
            mask = 0
            for i in s:
                mask |= 1 << i
            if mask:
                rows.append(mask)
    # greedy xor-basis of the support space over F2
    pivots: list[int] = []
    for r in rows:
        for p in pivots:
            r = min(r, r ^ p)
        if r:
            pivots.append(r)
            pivots.sort(reverse=True)
    gens = []
    for mask in pivots:
        prod = 1
        for i in range(k):
            if mask >> i & 1:
                prod *= container.basis[i]
        gens.append(prod)
    sub = mq_field(gens)
    return sub, galois_group(sub)
