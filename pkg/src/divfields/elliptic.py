"""Weierstrass curves over Q: exact group law, division polynomials,
torsion, twists, isogenies, and point halving.

Division polynomials follow the radical convention: for even n the odd
y-factor is stripped and replaced by the two-division cubic, so the returned
polynomial in x has the x-coordinates of the nontrivial points of order
dividing n as its roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import factor_over_Q, rational_roots, squarefree_part
from .errors import (
    CoordinateFieldMismatch,
    InvalidKernel,
    SingularCurve,
    TwoTorsionNotSplit,
    UnsupportedN,
    UnsupportedPrime,
    ZeroInput,
)
from .intarith import sqrt_rational
from .multiquad import MqElement, MqField, adjoin_sqrt, mq_field, sqrt_in
from .poly import UniPoly

F = Fraction


class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with exact invariants."""

    __slots__ = ("a1", "a2", "a3", "a4", "a6", "b2", "b4", "b6", "b8", "c4", "c6", "disc", "j")

    def __init__(self, a1, a2, a3, a4, a6):
        self.a1, self.a2, self.a3 = F(a1), F(a2), F(a3)
        self.a4, self.a6 = F(a4), F(a6)
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        self.b2 = a1 * a1 + 4 * a2
        self.b4 = 2 * a4 + a1 * a3
        self.b6 = a3 * a3 + 4 * a6
        self.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        self.c4 = self.b2**2 - 24 * self.b4
        self.c6 = -self.b2**3 + 36 * self.b2 * self.b4 - 216 * self.b6
        self.disc = (
            -self.b2**2 * self.b8
            - 8 * self.b4**3
            - 27 * self.b6**2
            + 9 * self.b2 * self.b4 * self.b6
        )
        if self.disc == 0:
            raise SingularCurve(f"singular model {self.a_invariants()}")
        self.j = self.c4**3 / self.disc

    def a_invariants(self) -> tuple[F, F, F, F, F]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeierstrassCurve)
            and self.a_invariants() == other.a_invariants()
        )

    def __hash__(self):
        return hash(self.a_invariants())

    def __repr__(self) -> str:
        return "WeierstrassCurve" + str(tuple(map(str, self.a_invariants())))

    def rhs(self, x):
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def two_division_cubic(self) -> UniPoly:
        """4x^3 + b2 x^2 + 2 b4 x + b6; roots are the 2-torsion x-coordinates."""
        return UniPoly([self.b6, 2 * self.b4, self.b2, 4])

    def short_model(self) -> tuple[F, F]:
        """(A, B) with Y^2 = X^3 + AX + B isomorphic via X = 36x + 3b2."""
        return -27 * self.c4, -54 * self.c6


def invariants(E: WeierstrassCurve) -> tuple[F, F, F, F]:
    return (E.c4, E.c6, E.disc, E.j)


def curve_from_list(coeffs) -> WeierstrassCurve:
    return WeierstrassCurve(*coeffs)


# -- points and the group law -------------------------------------------------


class CurvePoint:
    __slots__ = ("x", "y")

    def __init__(self, x=None, y=None):
        self.x, self.y = x, y

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurvePoint):
            return False
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return _eq_coord(self.x, other.x) and _eq_coord(self.y, other.y)

    def __hash__(self):
        return hash((str(self.x), str(self.y)))

    def __repr__(self) -> str:
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = CurvePoint()


def _eq_coord(a, b) -> bool:
    if isinstance(a, MqElement):
        return a == b if not isinstance(b, MqElement) or a.field == b.field else False
    if isinstance(b, MqElement):
        return b == a
    return a == b


def _common_field(values) -> MqField | None:
    field = None
    for v in values:
        if isinstance(v, MqElement):
            if field is None:
                field = v.field
            elif field != v.field:
                if field.contains_field(v.field):
                    continue
                if v.field.contains_field(field):
                    field = v.field
                else:
                    raise CoordinateFieldMismatch(f"{field} vs {v.field}")
    return field


def _lift(v, field: MqField | None):
    if field is None:
        return F(v) if not isinstance(v, MqElement) else v
    if isinstance(v, MqElement):
        return v if v.field == field else field.embed(v)
    return field.rational(v)


def on_curve(E: WeierstrassCurve, P: CurvePoint) -> bool:
    if P.is_infinity:
        return True
    field = _common_field([P.x, P.y])
    x, y = _lift(P.x, field), _lift(P.y, field)
    a1, a2, a3, a4, a6 = (_lift(a, field) for a in E.a_invariants())
    lhs = y * y + a1 * x * y + a3 * y
    rhs = ((x + a2) * x + a4) * x + a6
    return _eq_coord(lhs, rhs)


def neg_point(E: WeierstrassCurve, P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    field = _common_field([P.x, P.y])
    x, y = _lift(P.x, field), _lift(P.y, field)
    a1, a3 = _lift(E.a1, field), _lift(E.a3, field)
    return CurvePoint(x, -y - a1 * x - a3)


def add_points(E: WeierstrassCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Chord-tangent addition over Q or over a multiquadratic field."""
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    field = _common_field([P.x, P.y, Q.x, Q.y])
    x1, y1 = _lift(P.x, field), _lift(P.y, field)
    x2, y2 = _lift(Q.x, field), _lift(Q.y, field)
    a1, a2, a3, a4, a6 = (_lift(a, field) for a in E.a_invariants())
    if _eq_coord(x1, x2):
        if _eq_coord(y1 + y2 + a1 * x2 + a3, 0 if field is None else field.zero()):
            return INFINITY
        num = 3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1
        den = 2 * y1 + a1 * x1 + a3
    else:
        num, den = y2 - y1, x2 - x1
    lam = num / den
    nu = y1 - lam * x1
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return CurvePoint(x3, y3)


def scalar_mul(E: WeierstrassCurve, m: int, P: CurvePoint) -> CurvePoint:
    if m < 0:
        return scalar_mul(E, -m, neg_point(E, P))
    out = INFINITY
    base = P
    while m:
        if m & 1:
            out = add_points(E, out, base)
        base = add_points(E, base, base)
        m >>= 1
    return out


def point_order(E: WeierstrassCurve, P: CurvePoint, bound: int = 16) -> int | None:
    """Exact order of P if it is at most bound, else None."""
    acc = P
    for n in range(1, bound + 1):
        if acc.is_infinity:
            return n
        acc = add_points(E, acc, P)
    return None


# -- division polynomials ------------------------------------------------------


@lru_cache(maxsize=None)
def _psi_table(E: WeierstrassCurve, n_max: int):
    """psi[n] for odd n, psi-tilde[n] for even n (the y-factor stripped)."""
    b2, b4, b6, b8 = E.b2, E.b4, E.b6, E.b8
    T = E.two_division_cubic()
    psi: dict[int, UniPoly] = {
        0: UniPoly([]),
        1: UniPoly([1]),
        2: UniPoly([1]),
        3: UniPoly([b8, 3 * b6, 3 * b4, b2, 3]),
        4: UniPoly(
            [
                b4 * b8 - b6 * b6,
                b2 * b8 - b4 * b6,
                10 * b8,
                10 * b6,
                5 * b4,
                b2,
                2,
            ]
        ),
    }
    T2 = T * T
    for n in range(5, n_max + 1):
        if n % 2:
            m = (n - 1) // 2
            if m % 2 == 0:
                psi[n] = psi[m + 2] * psi[m] ** 3 * T2 - psi[m - 1] * psi[m + 1] ** 3
            else:
                psi[n] = psi[m + 2] * psi[m] ** 3 - psi[m - 1] * psi[m + 1] ** 3 * T2
        else:
            # in this table the stripped even entries satisfy the same shape
            # for either parity of m
            m = n // 2
            psi[n] = psi[m] * (
                psi[m + 2] * psi[m - 1] ** 2 - psi[m - 2] * psi[m + 1] ** 2
            )
    return psi


def division_polynomial(E: WeierstrassCurve, n: int) -> UniPoly:
    """Primitive x-polynomial vanishing at the nontrivial order-dividing-n
    x-coordinates (n <= 10)."""
    if not 2 <= n <= 10:
        raise UnsupportedN(f"n = {n} outside 2..10")
    psi = _psi_table(E, n)
    poly = psi[n] if n % 2 else E.two_division_cubic() * psi[n]
    return poly.primitive()


def exact_order_x_poly(E: WeierstrassCurve, n: int) -> UniPoly:
    """Primitive x-polynomial of the points of exact order n (n in 2..10)."""
    poly = division_polynomial(E, n)
    for d in range(2, n):
        if n % d == 0:
            poly = (poly // division_polynomial(E, d)).primitive()
    return poly


def doubling_x_map(E: WeierstrassCurve) -> tuple[UniPoly, UniPoly]:
    """x(2P) = num(x)/den(x) on x-coordinates."""
    num = UniPoly([-E.b8, -2 * E.b6, -E.b4, 0, 1])
    return num, E.two_division_cubic()


# -- torsion over Q -------------------------------------------------------------


def _rational_points_with_x(E: WeierstrassCurve, x: F) -> list[CurvePoint]:
    disc = E.two_division_cubic()(x)
    s = sqrt_rational(disc)
    if s is None:
        return []
    ys = {(-(E.a1 * x + E.a3) + s) / 2, (-(E.a1 * x + E.a3) - s) / 2}
    return [CurvePoint(x, y) for y in sorted(ys)]


def _exact_order_points(E: WeierstrassCurve, n: int) -> list[CurvePoint]:
    pts = []
    for x in rational_roots(exact_order_x_poly(E, n)):
        for P in _rational_points_with_x(E, x):
            if point_order(E, P) == n:
                pts.append(P)
    return pts


@dataclass(frozen=True)
class TorsionType:
    invariants: tuple[int, ...]  # (m,) or (m1, m2) with m1 | m2
    generators: tuple[CurvePoint, ...]

    @property
    def order(self) -> int:
        out = 1
        for m in self.invariants:
            out *= m
        return out

    def __str__(self) -> str:
        if self.invariants == (1,):
            return "trivial"
        return " x ".join(f"Z/{m}" for m in self.invariants)


_MAZUR_SHAPES = {(1,)} | {(m,) for m in (2, 3, 4, 5, 6, 7, 8, 9, 10, 12)} | {
    (2, 2 * m) for m in (1, 2, 3, 4)
}


def torsion_over_Q(E: WeierstrassCurve) -> TorsionType:
    """Rational torsion subgroup via division-polynomial root search."""
    parts: dict[int, list[list[CurvePoint]]] = {}
    for p, powers in ((2, (2, 4, 8)), (3, (3, 9)), (5, (5,)), (7, (7,))):
        layers = []
        for n in powers:
            pts = _exact_order_points(E, n)
            layers.append(pts)
            if not pts:
                break
        parts[p] = layers

    two_layers = parts[2]
    full_two = len(two_layers[0]) == 3 if two_layers else False
    p_orders = {}
    p_gen: dict[int, CurvePoint] = {}
    for p, layers in parts.items():
        size = 1
        top: CurvePoint | None = None
        for n_idx, pts in enumerate(layers):
            if pts:
                size *= p if (n_idx or p != 2 or not full_two) else 4
                top = pts[0]
        # recompute size honestly by counting
        count = 1 + sum(len(pts) for pts in layers)
        p_orders[p] = count
        if top is not None:
            p_gen[p] = top

    # 2-part structure
    c2 = len(two_layers[0]) if two_layers else 0
    size2 = p_orders[2]
    if full_two:
        inv2 = (2, size2 // 2)
    elif size2 > 1:
        inv2 = (1, size2)
    else:
        inv2 = (1, 1)
    m1 = inv2[0]
    m2 = inv2[1]
    for p in (3, 5, 7):
        assert p_orders[p] in (1, p, p * p)
        m2 *= p_orders[p]

    invs = (m2,) if m1 == 1 else (m1, m2)
    assert invs in _MAZUR_SHAPES, f"non-admissible torsion {invs}"

    # generators: combine the maximal p-power points into one cyclic generator
    gen = INFINITY
    for p in (2, 3, 5, 7):
        if p in p_gen and point_order(E, p_gen[p]):
            gen = add_points(E, gen, p_gen[p])
    gens: list[CurvePoint] = []
    if not gen.is_infinity:
        gens.append(gen)
    if m1 == 2:
        # an independent 2-torsion point
        two_pts = two_layers[0]
        t = scalar_mul(E, m2 // 2, gen) if not gen.is_infinity else INFINITY
        for P in two_pts:
            if P != t:
                gens.append(P)
                break
    if invs == (1,):
        gens = []
    out = TorsionType(invs, tuple(gens))
    for g, m in zip(out.generators, (m2, m1)):
        assert point_order(E, g) == m
    return out


# -- twists ----------------------------------------------------------------------


def quadratic_twist(E: WeierstrassCurve, d: int) -> WeierstrassCurve:
    """Twist by squarefree d; j is preserved."""
    if d == 0:
        raise ZeroInput("twist by 0")
    if E.a1 == 0 and E.a3 == 0:
        return WeierstrassCurve(0, d * E.a2, 0, d * d * E.a4, d**3 * E.a6)
    return WeierstrassCurve(
        0, d * E.b2 / 4, 0, d * d * E.b4 / 2, d**3 * E.b6 / 4
    )


# -- rational isogeny kernels ------------------------------------------------------


def _is_doubling_stable(E: WeierstrassCurve, g: UniPoly) -> bool:
    num, den = doubling_x_map(E)
    acc = UniPoly([])
    d = g.degree
    num_pow = UniPoly([1])
    den_pow = [UniPoly([1])]
    for _ in range(d):
        den_pow.append(den_pow[-1] * den)
    for i, c in enumerate(g.coeffs):
        if c:
            acc = acc + (num_pow * den_pow[d - i]).scale(c)
        num_pow = num_pow * num
    return (acc % g).is_zero()


def rational_isogeny_kernels(E: WeierstrassCurve, p: int) -> list[UniPoly]:
    """Kernel polynomials of the Galois-stable cyclic order-p subgroups."""
    if p == 2:
        roots = rational_roots(E.two_division_cubic())
        return sorted((UniPoly([-r, 1]) for r in roots), key=lambda g: g.coeffs)
    if p == 3:
        roots = rational_roots(division_polynomial(E, 3))
        return sorted((UniPoly([-r, 1]) for r in roots), key=lambda g: g.coeffs)
    if p not in (5, 7):
        raise UnsupportedPrime(f"p = {p} not in 2, 3, 5, 7")
    psi_p = division_polynomial(E, p)
    _, facs = factor_over_Q(psi_p)
    atoms = [g.monic() for g, _ in facs if g.degree <= (p - 1) // 2]
    target = (p - 1) // 2
    candidates: set[UniPoly] = set()

    def build(i: int, g: UniPoly):
        if g.degree == target:
            candidates.add(g)
            return
        for k in range(i, len(atoms)):
            if g.degree + atoms[k].degree <= target:
                build(k + 1, g * atoms[k])

    build(0, UniPoly([1]))
    kernels = [g for g in candidates if _is_doubling_stable(E, g)]
    return sorted(kernels, key=lambda g: g.coeffs)


# -- Velu isogenies -----------------------------------------------------------------


def _power_sums(h: UniPoly, upto: int = 3) -> list[F]:
    """Newton power sums p1..p_upto of the roots of a monic polynomial."""
    d = h.degree
    e = [F(0)] * (upto + 1)
    for k in range(1, upto + 1):
        e[k] = ((-1) ** k) * h[d - k] if d - k >= 0 else F(0)
    p = [F(0)] * (upto + 1)
    for k in range(1, upto + 1):
        acc = F(0)
        for i in range(1, k):
            acc += ((-1) ** (i - 1)) * e[i] * p[k - i]
        p[k] = acc + ((-1) ** (k - 1)) * k * e[k]
    return p


def velu_isogeny(E: WeierstrassCurve, kernel: UniPoly) -> WeierstrassCurve:
    """Codomain of the quotient isogeny for a kernel given by its x-polynomial.

    The kernel polynomial lists each x-coordinate of the nonzero kernel
    points once; the curve is moved to short form and the classical
    trace-style sums are evaluated from the kernel's power sums.
    """
    kernel = kernel.monic() if not kernel.is_zero() else kernel
    if kernel.is_zero():
        raise InvalidKernel("zero kernel polynomial")
    if kernel.degree == 0:
        return E
    A, B = E.short_model()
    # move kernel to the short model: X = 36x + 3b2
    d = kernel.degree
    hs = kernel.compose(UniPoly([F(-3 * E.b2, 36), F(1, 36)]))
    hs = hs.scale(F(36) ** d).monic()
    cubic = UniPoly([B, A, 0, 1])
    h2 = hs.gcd(cubic)
    hodd = (hs // h2).monic()
    order = 1 + h2.degree + 2 * hodd.degree
    # validity: the 2-part is trivial, a single point, or all of E[2]; the
    # x-coordinates are order-dividing points; the odd part (where the
    # doubling map is defined) is closed under doubling
    if h2.degree == 2:
        raise InvalidKernel("two of the three 2-division points do not form a group")
    if order > 10 or not kernel.divides(division_polynomial(E, order)):
        raise InvalidKernel("kernel polynomial does not divide the division polynomial")
    kernel_odd = (kernel // kernel.gcd(E.two_division_cubic().monic())).monic()
    if kernel_odd.degree > 0 and not _is_doubling_stable(E, kernel_odd):
        raise InvalidKernel("kernel not closed under doubling")
    p2 = _power_sums(h2)
    po = _power_sums(hodd)
    t = 3 * p2[2] + A * h2.degree + 6 * po[2] + 2 * A * hodd.degree
    w = (
        3 * p2[3]
        + A * p2[1]
        + 10 * po[3]
        + 6 * A * po[1]
        + 4 * B * hodd.degree
    )
    return WeierstrassCurve(0, 0, 0, A - 5 * t, B - 7 * w)


# -- halving ---------------------------------------------------------------------


@dataclass(frozen=True)
class SplitTwoTorsion:
    """The 2-division roots as exact elements of a multiquadratic field."""

    field: MqField
    roots: tuple  # three MqElements


def split_two_torsion(E: WeierstrassCurve, field: MqField | None = None) -> SplitTwoTorsion:
    """Express the three 2-division roots in a multiquadratic field.

    With an explicit field the roots must already lie there; with field=None
    the smallest container (Q or one quadratic) is built.  An irreducible
    cubic raises TwoTorsionNotSplit: its roots generate a degree-3 field that
    has no multiquadratic model.
    """
    cubic = E.two_division_cubic()
    _, facs = factor_over_Q(cubic)
    linear = [g for g, m in facs for _ in range(m) if g.degree == 1]
    quads = [g for g, m in facs for _ in range(m) if g.degree == 2]
    if len(linear) + 2 * len(quads) != 3:
        raise TwoTorsionNotSplit("2-division cubic is irreducible")
    rational = sorted(F(-g[0], g[1]) for g in linear)
    if quads:
        g = quads[0].monic()
        e, f0 = g[1], g[0]
        disc = e * e - 4 * f0
        sc = squarefree_part(disc)
        dclass, cof = sc.squarefree, sc.cofactor
        if field is None:
            K = mq_field([dclass])
        elif dclass in field.span():
            K = field
        else:
            raise TwoTorsionNotSplit(
                f"2-division roots lie in class {dclass}, outside {field}"
            )
        w = K.sqrt_of_class(dclass) * cof
        alpha = (w - e) * F(1, 2)
        beta = (-w - e) * F(1, 2)
        roots = [K.rational(r) for r in rational] + [alpha, beta]
        return SplitTwoTorsion(K, tuple(roots))
    K = field if field is not None else MqField(())
    return SplitTwoTorsion(K, tuple(K.rational(r) for r in rational))


def halving_obstruction(E: WeierstrassCurve, P: CurvePoint, split: SplitTwoTorsion):
    """The three quantities x0 - root; P is halvable over the field iff all
    three are squares there."""
    if P.is_infinity:
        return [split.field.zero()] * 3
    x0 = _lift(P.x, split.field)
    return [x0 - r for r in split.roots]


@dataclass(frozen=True)
class HalveResult:
    kind: str  # "ok" | "not_polyquadratic"
    point: CurvePoint | None
    field: MqField | None
    new_classes: tuple[int, ...] = ()


def halve_point(E: WeierstrassCurve, P: CurvePoint, field: MqField) -> HalveResult:
    """A point Q with 2Q = P over the smallest multiquadratic extension of
    `field` that supports it, or not_polyquadratic."""
    split = split_two_torsion(E, field)
    field = split.field
    if P.is_infinity:
        return HalveResult("ok", INFINITY, field)
    obstructions = halving_obstruction(E, P, split)
    K = field
    new_classes: list[int] = []
    for ob in obstructions:
        if ob.is_zero():
            continue
        res = adjoin_sqrt(K, K.embed(ob))
        if res.kind == "not_polyquadratic":
            return HalveResult("not_polyquadratic", None, None)
        if res.kind == "extended":
            K = res.field
            new_classes.append(res.new_class)
    roots = [K.embed(r) for r in split.roots]
    x0 = _lift(P.x, K)
    y0 = _lift(P.y, K)
    eta0 = y0 + (_lift(E.a1, K) * x0 + _lift(E.a3, K)) * F(1, 2)
    diffs = [x0 - r for r in roots]
    sqrts = []
    for dl in diffs:
        if dl.is_zero():
            sqrts.append(K.zero())
        else:
            s = sqrt_in(dl)
            assert s is not None, "obstruction adjoined but square root missing"
            sqrts.append(s)
    s1, s2, s3 = sqrts
    prod = s1 * s2 * s3
    if not prod == eta0:
        if prod == -eta0:
            nonzero = next(i for i, s in enumerate(sqrts) if not s.is_zero())
            sqrts[nonzero] = -sqrts[nonzero]
            s1, s2, s3 = sqrts
        else:
            assert eta0.is_zero() or (prod * prod) == (eta0 * eta0)
    xq = x0 + s1 * s2 + s1 * s3 + s2 * s3
    fq = (xq - roots[0]) * (xq - roots[1]) * (xq - roots[2])
    if fq.is_zero():
        etaq = K.zero()
    else:
        etaq = sqrt_in(fq)
        if etaq is None:
            # the chosen sign pattern can land on a conjugate half; try the rest
            for flip in range(3):
                alt = list(sqrts)
                alt[flip] = -alt[flip]
                alt[(flip + 1) % 3] = -alt[(flip + 1) % 3]
                t1, t2, t3 = alt
                xq2 = x0 + t1 * t2 + t1 * t3 + t2 * t3
                fq2 = (xq2 - roots[0]) * (xq2 - roots[1]) * (xq2 - roots[2])
                etaq = sqrt_in(fq2) if not fq2.is_zero() else K.zero()
                if etaq is not None:
                    xq = xq2
                    break
            assert etaq is not None, "no half found over the adjoined field"
    for candidate in (etaq, -etaq):
        yq = candidate - (_lift(E.a1, K) * xq + _lift(E.a3, K)) * F(1, 2)
        Q = CurvePoint(xq, yq)
        if scalar_mul(E, 2, Q) == P:
            return HalveResult("ok", Q, K, tuple(new_classes))
    raise AssertionError("doubling check failed for both square-root signs")


@dataclass(frozen=True)
class FourTorsionField:
    kind: str  # "field" | "not_polyquadratic"
    field: MqField | None
    split: SplitTwoTorsion | None
    obstruction: MqElement | None = None


def four_torsion_field(E: WeierstrassCurve) -> FourTorsionField:
    """Q(E[4]) as a multiquadratic field, when it is one.

    Built from the corollary of the halving criterion: adjoin sqrt(-1) and the
    square roots of the three pairwise differences of the 2-division roots.
    """
    try:
        split = split_two_torsion(E)
    except TwoTorsionNotSplit:
        return FourTorsionField("not_polyquadratic", None, None)
    a, b, c = split.roots
    K = split.field
    r0 = adjoin_sqrt(K, -1)
    if r0.kind == "extended":
        K = r0.field
    for e in (a - b, a - c, b - c):
        e2 = K.embed(e)
        if e2.is_zero():
            raise SingularCurve("repeated 2-division roots")
        res = adjoin_sqrt(K, e2)
        if res.kind == "not_polyquadratic":
            return FourTorsionField("not_polyquadratic", None, split, obstruction=e2)
        if res.kind == "extended":
            K = res.field
    split_in_K = SplitTwoTorsion(K, tuple(K.embed(r) for r in split.roots))
    return FourTorsionField("field", K, split_in_K)


# -- CM recognition -----------------------------------------------------------------


CM_J_INVARIANTS: dict[F, tuple[int, str]] = {
    F(0): (-3, "disc -3"),
    F(54000): (-3, "disc -12 (conductor 2)"),
    F(-12288000): (-3, "disc -27 (conductor 3)"),
    F(1728): (-4, "disc -4"),
    F(287496): (-4, "disc -16 (conductor 2)"),
    F(-3375): (-7, "disc -7"),
    F(16581375): (-7, "disc -28 (conductor 2)"),
    F(8000): (-8, "disc -8"),
    F(-32768): (-11, "disc -11"),
    F(-884736): (-19, "disc -19"),
    F(-884736000): (-43, "disc -43"),
    F(-147197952000): (-67, "disc -67"),
    F(-262537412640768000): (-163, "disc -163"),
}


def cm_recognize(j) -> tuple[int, str] | None:
    """(field discriminant, row tag) for the thirteen rational CM j-invariants."""
    return CM_J_INVARIANTS.get(F(j))
