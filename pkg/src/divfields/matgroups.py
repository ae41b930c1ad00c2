"""Finite subgroups of GL(2, Z/nZ): group engine, Cartan/Borel structure,
and exhaustive audits of the diagonalizability statements.

The ambient group is materialized once per modulus (n <= 9) with a Cayley
table, so closures, centralizers, and conjugation are table lookups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import UnsupportedModulus
from .intarith import factor_int

Mat2 = tuple[int, int, int, int]  # (a, b, c, d) row-major, entries mod n

MAX_MODULUS = 9


def group_order(n: int) -> int:
    """|GL(2, Z/nZ)|."""
    if n < 1:
        raise UnsupportedModulus(str(n))
    out = 1
    if n == 1:
        return 1
    for p, e in factor_int(n).items():
        out *= p ** (4 * (e - 1)) * (p * p - 1) * (p * p - p)
    return out


def mat_mul(A: Mat2, B: Mat2, n: int) -> Mat2:
    a, b, c, d = A
    e, f, g, h = B
    return (
        (a * e + b * g) % n,
        (a * f + b * h) % n,
        (c * e + d * g) % n,
        (c * f + d * h) % n,
    )


def mat_det(A: Mat2, n: int) -> int:
    return (A[0] * A[3] - A[1] * A[2]) % n


def mat_inv(A: Mat2, n: int) -> Mat2:
    det_inv = pow(mat_det(A, n), -1, n)
    a, b, c, d = A
    return (d * det_inv % n, -b * det_inv % n, -c * det_inv % n, a * det_inv % n)


class AmbientGL2:
    """GL(2, Z/nZ) with full multiplication table and commutation data."""

    def __init__(self, n: int):
        if not 2 <= n <= MAX_MODULUS:
            raise UnsupportedModulus(f"full enumeration needs 2 <= n <= {MAX_MODULUS}")
        self.n = n
        elems: list[Mat2] = []
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    for d in range(n):
                        if gcd((a * d - b * c) % n, n) == 1:
                            elems.append((a, b, c, d))
        self.elements = elems
        self.size = len(elems)
        assert self.size == group_order(n)
        self.index = {m: i for i, m in enumerate(elems)}
        enc = np.full(n**4, -1, dtype=np.int32)
        arr = np.array(elems, dtype=np.int64)
        keys = ((arr[:, 0] * n + arr[:, 1]) * n + arr[:, 2]) * n + arr[:, 3]
        enc[keys] = np.arange(self.size, dtype=np.int32)
        a, b, c, d = (arr[:, i] for i in range(4))
        mul = np.empty((self.size, self.size), dtype=np.int32)
        for i, (p, q, r, s) in enumerate(elems):
            ra = (p * a + q * c) % n
            rb = (p * b + q * d) % n
            rc = (r * a + s * c) % n
            rd = (r * b + s * d) % n
            mul[i] = enc[((ra * n + rb) * n + rc) * n + rd]
        self.mul = mul
        self.identity = self.index[(1 % n, 0, 0, 1 % n)]
        inv = np.empty(self.size, dtype=np.int32)
        eye = np.nonzero(mul == self.identity)
        inv[eye[0]] = eye[1]
        self.inv = inv
        self.det = np.array([mat_det(m, n) for m in elems], dtype=np.int32)
        self.trace = np.array([(m[0] + m[3]) % n for m in elems], dtype=np.int32)
        self.commute = mul == mul.T
        self.units = sorted(u for u in range(1, n) if gcd(u, n) == 1)

    # -- element helpers ----------------------------------------------------

    def power(self, i: int, e: int) -> int:
        acc, x = self.identity, i
        while e:
            if e & 1:
                acc = int(self.mul[acc, x])
            x = int(self.mul[x, x])
            e >>= 1
        return acc

    def order_of(self, i: int) -> int:
        k, acc = 1, i
        while acc != self.identity:
            acc = int(self.mul[acc, i])
            k += 1
        return k

    def closure(self, gens) -> frozenset[int]:
        gens = sorted(set(int(g) for g in gens) | {self.identity})
        seen = set(gens)
        frontier = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = int(self.mul[x, g])
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        # gens may not include inverses; finite closure under product suffices
        return frozenset(seen)

    def conjugate_set(self, S, g: int) -> frozenset[int]:
        arr = np.fromiter(S, dtype=np.int64, count=len(S))
        return frozenset(self.mul[self.mul[int(self.inv[g]), arr], g].tolist())

    def centralizer_mask(self, idx_iter) -> np.ndarray:
        mask = np.ones(self.size, dtype=bool)
        for i in idx_iter:
            mask &= self.commute[i]
        return mask

    def is_abelian_set(self, S) -> bool:
        arr = np.fromiter(S, dtype=np.int64, count=len(S))
        return bool(self.commute[np.ix_(arr, arr)].all())


@lru_cache(maxsize=None)
def ambient(n: int) -> AmbientGL2:
    return AmbientGL2(n)


@dataclass(frozen=True)
class Gl2Subgroup:
    """A subgroup held as generators plus its closed element set."""

    modulus: int
    generators: tuple[Mat2, ...]
    elements: frozenset[Mat2]

    @staticmethod
    def generated(n: int, gens) -> "Gl2Subgroup":
        amb = ambient(n)
        gens = [tuple(x % n for x in g) for g in gens]
        idx = amb.closure([amb.index[g] for g in gens])
        return Gl2Subgroup(n, tuple(gens), frozenset(amb.elements[i] for i in idx))

    def __post_init__(self):
        n = self.modulus
        eles = self.elements
        ident = (1 % n, 0, 0, 1 % n)
        assert ident in eles, "identity missing"
        assert all(g in eles for g in self.generators)
        if len(eles) <= 512:
            lst = sorted(eles)
            for x in lst:
                assert mat_inv(x, n) in eles, "inverse missing"
                for y in lst:
                    assert mat_mul(x, y, n) in eles, "set not closed"

    @property
    def order(self) -> int:
        return len(self.elements)

    def indices(self) -> list[int]:
        amb = ambient(self.modulus)
        return sorted(amb.index[m] for m in self.elements)

    def is_abelian(self) -> bool:
        n = self.modulus
        lst = sorted(self.elements)
        return all(
            mat_mul(x, y, n) == mat_mul(y, x, n)
            for i, x in enumerate(lst)
            for y in lst[i + 1 :]
        )

    def fingerprint(self) -> frozenset[tuple[int, int]]:
        """All (trace, det) pairs mod n; conjugation-invariant."""
        n = self.modulus
        return frozenset(((m[0] + m[3]) % n, mat_det(m, n)) for m in self.elements)

    def det_image(self) -> frozenset[int]:
        return frozenset(mat_det(m, self.modulus) for m in self.elements)

    def abelian_invariants(self) -> tuple[int, ...]:
        amb = ambient(self.modulus)
        idx = self.indices()
        assert amb.is_abelian_set(idx)
        return _abelian_invariants_from_orders(amb, idx)


def _abelian_invariants_from_orders(amb: AmbientGL2, idx) -> tuple[int, ...]:
    """Invariant factors of an abelian subgroup from order statistics."""
    size = len(idx)
    if size == 1:
        return (1,)
    parts: dict[int, list[int]] = {}
    for p, e_max in factor_int(size).items():
        # counts[k] = #elements of order dividing p^k
        counts = [
            sum(1 for i in idx if amb.power(i, p**k) == amb.identity)
            for k in range(e_max + 1)
        ]
        # lam[k] = #cyclic factors with exponent >= k
        lam = [0] * (e_max + 2)
        for k in range(1, e_max + 1):
            ratio = counts[k] // counts[k - 1]
            while ratio > 1:
                ratio //= p
                lam[k] += 1
        invs = []
        for k in range(e_max, 0, -1):
            invs.extend([p**k] * (lam[k] - lam[k + 1]))
        parts[p] = sorted(invs)
    width = max(len(v) for v in parts.values())
    combined = []
    for pos in range(width):
        f = 1
        for v in parts.values():
            if pos < len(v):
                f *= v[len(v) - 1 - pos]
        combined.append(f)
    return tuple(sorted(combined))


# -- Cartan subgroups ------------------------------------------------------------


def least_nonresidue(p: int) -> int:
    for eps in range(2, p):
        if pow(eps, (p - 1) // 2, p) == p - 1:
            return eps
    raise ValueError(f"{p} has no non-residue")


def cartan_subgroups(p: int):
    """(C_split, its normalizer, C_nonsplit, its normalizer) in GL(2, F_p)."""
    if p not in (3, 5, 7):
        raise UnsupportedModulus("Cartan constructions for p in {3, 5, 7}")
    amb = ambient(p)
    split = frozenset(amb.index[(a, 0, 0, b)] for a in amb.units for b in amb.units)
    eps = least_nonresidue(p)
    nonsplit = frozenset(
        amb.index[(a, eps * b % p, b, a)]
        for a in range(p)
        for b in range(p)
        if (a * a - eps * b * b) % p
    )

    def normalizer(S):
        return frozenset(g for g in range(amb.size) if amb.conjugate_set(S, g) == S)

    def to_subgroup(S):
        eles = frozenset(amb.elements[i] for i in S)
        return Gl2Subgroup(p, tuple(sorted(eles)), eles)

    return (
        to_subgroup(split),
        to_subgroup(normalizer(split)),
        to_subgroup(nonsplit),
        to_subgroup(normalizer(nonsplit)),
    )


# -- Borel structure ---------------------------------------------------------------


def is_borel(G: Gl2Subgroup) -> bool:
    return all(m[2] == 0 for m in G.elements)


def borel_parts(G: Gl2Subgroup) -> tuple[Gl2Subgroup, Gl2Subgroup]:
    """(B1, Bd): unipotent part and diagonal part of an upper-triangular group."""
    assert is_borel(G)
    n = G.modulus
    one = 1 % n
    b1 = frozenset(m for m in G.elements if m[0] == one and m[3] == one and m[2] == 0)
    bd = frozenset(m for m in G.elements if m[1] == 0 and m[2] == 0)
    return (
        Gl2Subgroup(n, tuple(sorted(b1)), b1),
        Gl2Subgroup(n, tuple(sorted(bd)), bd),
    )


# -- diagonalizability ----------------------------------------------------------------


def _primitive_vector_reps(n: int, p: int) -> list[tuple[int, int]]:
    """Primitive vectors of (Z/nZ)^2 up to unit scaling, n a power of p."""
    return [(1, t) for t in range(n)] + [(t * p % n, 1) for t in range(n // p)]


def is_diagonalizable(G: Gl2Subgroup):
    """A conjugator h with h^-1 G h diagonal, or None after exhausting all
    candidate eigenvector pairs (exhaustive for prime-power moduli)."""
    n = G.modulus
    fac = factor_int(n)
    if len(fac) != 1:
        raise UnsupportedModulus("prime power modulus required")
    p = next(iter(fac))
    eles = sorted(G.elements)
    eig = []
    for v in _primitive_vector_reps(n, p):
        x, y = v
        if all((m[0] * x + m[1] * y) * y % n == (m[2] * x + m[3] * y) * x % n for m in eles):
            eig.append(v)
    for i, v in enumerate(eig):
        for w in eig[i + 1 :]:
            if gcd((v[0] * w[1] - v[1] * w[0]) % n, n) == 1:
                h = (v[0], w[0], v[1], w[1])
                hinv = mat_inv(h, n)
                for m in eles:
                    c = mat_mul(mat_mul(hinv, m, n), h, n)
                    assert c[1] == 0 and c[2] == 0
                return h
    return None


# -- audit reports -----------------------------------------------------------------------


@dataclass
class AuditReport:
    statement: str
    parameter: str
    cases: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "statement": self.statement,
            "parameter": self.parameter,
            "cases": self.cases,
            "counterexamples": [repr(c) for c in self.counterexamples],
            "passed": self.passed,
        }


# -- Borel lemma audit -------------------------------------------------------------------

# Upper-triangular matrices are handled as (a, b, c) triples standing for
# (a b; 0 c); products are (a, b, c)(a', b', c') = (aa', ab' + bc', cc').


def _tri_mul(x, y, n):
    return (x[0] * y[0] % n, (x[0] * y[1] + x[1] * y[2]) % n, x[2] * y[2] % n)


def _tri_inv(x, n):
    ai = pow(x[0], -1, n)
    ci = pow(x[2], -1, n)
    return (ai, -ai * x[1] * ci % n, ci)


def _tri_closure(gens, n):
    ident = (1, 0, 1)
    full = list(gens) + [_tri_inv(g, n) for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        x = frontier.pop()
        for g in full:
            y = _tri_mul(x, g, n)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def _subgroups_of_zm2(m: int):
    """Subgroups of (Z/m)^2 as generator pairs (a, 0), (b, c).

    Classical parametrization: a | m, c | m, 0 <= b < a with (m/c) b = 0
    mod a; every subgroup appears exactly once.
    """
    divisors = [d for d in range(1, m + 1) if m % d == 0]
    out = []
    for a in divisors:
        for c in divisors:
            step = m // c
            for b in range(a):
                if (step * b) % a == 0:
                    out.append(((a % m, 0), (b % m, c % m)))
    return out


def _upper_triangular_subgroups(p: int, e: int):
    """All subgroups of the full upper-triangular group mod p^e, up to the
    simultaneous unit scaling of the off-diagonal entries (conjugation by
    diagonal matrices), as frozensets of (a, b, c) triples."""
    n = p**e
    m = (p - 1) * p ** (e - 1)
    gen = next(g for g in range(2, n) if gcd(g, n) == 1 and _mult_order(g, n) == m)
    upow = [pow(gen, k, n) for k in range(m)]
    units = [u for u in range(1, n) if gcd(u, n) == 1]

    seen: set[frozenset] = set()
    for (d1, d2) in _subgroups_of_zm2(m):
        diag_gens = [(upow[d1[0]], upow[d1[1]]), (upow[d2[0]], upow[d2[1]])]
        for s in range(e + 1):
            k = p**s
            # offsets for the two lifts matter mod the unipotent subgroup
            # <p^s> and mod simultaneous scaling by units
            offs = set()
            for b1 in range(k):
                for b2 in range(k):
                    offs.add(min(((u * b1) % k, (u * b2) % k) for u in units))
            for b1, b2 in sorted(offs):
                gens = []
                if s < e:
                    gens.append((1, p**s, 1))
                gens.append((diag_gens[0][0], b1, diag_gens[0][1]))
                gens.append((diag_gens[1][0], b2, diag_gens[1][1]))
                B = _tri_closure(gens, n)
                if B not in seen:
                    seen.add(B)
                    yield B


def _mult_order(g: int, n: int) -> int:
    k, acc = 1, g % n
    while acc != 1:
        acc = acc * g % n
        k += 1
    return k


def _tri_commutator_subgroup(eles, n):
    """Commutator subgroup of an upper-triangular group (normal closure of
    pairwise commutators; the unipotent values make iteration cheap)."""
    lst = sorted(eles)
    comms = set()
    for x in lst:
        xin = _tri_inv(x, n)
        for y in lst:
            c = _tri_mul(_tri_mul(x, y, n), _tri_inv(_tri_mul(y, x, n), n), n)
            comms.add(c)
    return _tri_closure(comms, n)


def audit_borel_lemma(p: int, exponent: int = 1) -> AuditReport:
    """Check the triangular normal form on every subgroup containing an
    element with distinct diagonal entries mod p.

    For each such B and its first witness g = (a b; 0 c), conjugating by
    h = (1, b/(c-a); 0, 1) must give B' = Bd'.B1' with [B', B'] = B1', and
    the original commutator subgroup must be B's unipotent part.
    """
    if p not in (3, 5) or exponent not in (1, 2):
        raise UnsupportedModulus("borel audit runs for p in {3,5}, exponent 1 or 2")
    n = p**exponent
    report = AuditReport("triangular normal form", f"modulus {n}")
    for B in _upper_triangular_subgroups(p, exponent):
        witness = next((t for t in sorted(B) if (t[0] - t[2]) % p != 0), None)
        if witness is None:
            continue
        report.cases += 1
        a, b, c = witness
        h = (1, b * pow((c - a) % n, -1, n) % n, 1)
        hinv = _tri_inv(h, n)
        Bp = frozenset(_tri_mul(_tri_mul(hinv, t, n), h, n) for t in B)
        one = 1 % n
        b1 = {t for t in Bp if t[0] == one and t[2] == one}
        ok = True
        for t in Bp:
            u = (t[0], 0, t[2])
            v = (1, t[1] * pow(t[0], -1, n) % n, 1)
            if u not in Bp or v not in Bp or _tri_mul(u, v, n) != t:
                ok = False
                break
        if ok:
            comm = _tri_commutator_subgroup(Bp, n)
            if comm != frozenset(b1):
                ok = False
            else:
                comm0 = _tri_commutator_subgroup(B, n)
                if comm0 != frozenset(t for t in B if t[0] == one and t[2] == one):
                    ok = False
        if not ok:
            report.counterexamples.append(sorted(B)[:4])
    return report


# -- mod p^2 diagonalization audit ----------------------------------------------------------


def audit_mod_p2_diagonal(p: int) -> AuditReport:
    """Abelian groups mod p^2, diagonal mod p, with a witness of distinct
    diagonal mod p, are conjugates of diagonal groups.

    Coverage: every such group lies in the centralizer of its witness g, and
    that centralizer is exactly the two-parameter family checked below, so
    conjugating all of it by the explicit m covers every subgroup at once.
    Witnesses run up to diagonal conjugacy (the off-diagonal pair (b, c)
    scales as (ub, c/u)).
    """
    if p not in (3, 5):
        raise UnsupportedModulus("mod p^2 audit runs for p in {3, 5}")
    n = p * p
    report = AuditReport("abelian diagonal-mod-p groups diagonalize", f"p = {p}")
    units = [u for u in range(1, n) if u % p != 0]
    bc_reps = [(0, 0), (1, 0), (0, 1)] + [(1, c) for c in range(1, p)]
    for a in units:
        for d in units:
            if (a - d) % p == 0:
                continue
            for b, c in bc_reps:
                g = (a, b * p % n, c * p % n, d)
                inv_ad = pow((a - d) % n, -1, n)
                mconj = (1, -b * p * inv_ad % n, c * p * inv_ad % n, 1)
                minv = mat_inv(mconj, n)
                report.cases += 1
                size = 0
                for w in units:
                    for z in units:
                        x = b * p * (w - z) * inv_ad % n
                        y = c * p * (w - z) * inv_ad % n
                        t = (w, x, y, z)
                        size += 1
                        if mat_mul(t, g, n) != mat_mul(g, t, n):
                            report.counterexamples.append(("non-commuting", g, t))
                            continue
                        conj = mat_mul(mat_mul(minv, t, n), mconj, n)
                        if conj[1] != 0 or conj[2] != 0:
                            report.counterexamples.append((g, t))
                assert size == p * p * (p - 1) ** 2  # the whole centralizer
    return report


# -- mod p abelian diagonalizability audit ------------------------------------------------------


def _conjugacy_class_reps(amb: AmbientGL2) -> list[int]:
    seen = np.zeros(amb.size, dtype=bool)
    reps = []
    allidx = np.arange(amb.size)
    for i in range(amb.size):
        if seen[i]:
            continue
        reps.append(i)
        orbit = amb.mul[amb.mul[amb.inv[allidx], i], allidx]
        seen[orbit] = True
    return reps


def _pair_generated_abelian(amb: AmbientGL2, triples: bool = False):
    """Closures of commuting generator tuples, first generator a class rep."""
    reps = _conjugacy_class_reps(amb)
    scalars = {amb.index[(u, 0, 0, u)] for u in amb.units}
    seen: set[frozenset] = set()
    for r in reps:
        if r in scalars:
            continue
        cent = np.nonzero(amb.commute[r])[0]
        for g2 in cent:
            S = amb.closure([r, int(g2)])
            if S not in seen:
                seen.add(S)
                yield S
            if triples:
                mask = amb.commute[r] & amb.commute[int(g2)]
                for g3 in np.nonzero(mask)[0]:
                    S3 = amb.closure([r, int(g2), int(g3)])
                    if S3 not in seen:
                        seen.add(S3)
                        yield S3


def _subgroup_from_indices(amb: AmbientGL2, idx) -> Gl2Subgroup:
    eles = frozenset(amb.elements[i] for i in idx)
    return Gl2Subgroup(amb.n, (), eles)


def _image_constraints_hold(amb: AmbientGL2, S) -> bool:
    """Surjective determinant plus a complex-conjugation style element."""
    n = amb.n
    arr = np.fromiter(S, dtype=np.int64, count=len(S))
    if set(amb.det[arr].tolist()) != set(amb.units):
        return False
    if n == 2:
        return True
    neg = (-1) % n
    return any(
        amb.det[i] == neg and amb.trace[i] == 0 and amb.mul[i, i] == amb.identity
        for i in S
    )


def audit_diagonalizability(p: int, triples: bool = False) -> AuditReport:
    """Every abelian subgroup of GL(2, F_p) with surjective determinant and a
    trace-0 determinant-(-1) involution is diagonalizable."""
    if p not in (3, 5, 7):
        raise UnsupportedModulus("diagonalizability audit runs for p in {3,5,7}")
    amb = ambient(p)
    report = AuditReport("abelian image groups diagonalize", f"p = {p}")
    for S in _pair_generated_abelian(amb, triples=triples):
        if not amb.is_abelian_set(S):
            continue
        if not _image_constraints_hold(amb, S):
            continue
        report.cases += 1
        G = _subgroup_from_indices(amb, S)
        if is_diagonalizable(G) is None:
            report.counterexamples.append(sorted(G.elements)[:3])
    return report


# -- abelian candidate enumeration ------------------------------------------------------


def _maximal_abelian_subgroups(amb: AmbientGL2) -> list[frozenset[int]]:
    """All maximal abelian subgroups, by centralizer refinement.

    Invariant: each stack entry is the centralizer of a commuting set; when
    such a set is abelian it equals its own centralizer, hence is maximal.
    Refining a non-abelian K by every element g that is non-central in K
    reaches every maximal abelian subgroup inside K.
    """
    results: set[frozenset] = set()
    memo: set[frozenset] = set()
    # distinct single-element centralizers seed the refinement
    stack = []
    seen_masks = set()
    for g in range(amb.size):
        key = amb.commute[g].tobytes()
        if key not in seen_masks:
            seen_masks.add(key)
            stack.append(frozenset(np.nonzero(amb.commute[g])[0].tolist()))
    while stack:
        K = stack.pop()
        if K in memo:
            continue
        memo.add(K)
        arr = np.fromiter(K, dtype=np.int64, count=len(K))
        sub = amb.commute[np.ix_(arr, arr)]
        if sub.all():
            results.add(K)
            continue
        central = sub.all(axis=0)
        for pos in np.nonzero(~central)[0]:
            g = int(arr[pos])
            mask = amb.commute[g]
            refined = frozenset(i for i in K if mask[i])
            if refined not in memo:
                stack.append(refined)
    return sorted(results, key=lambda s: (-len(s), sorted(s)[:4]))


def _conjugation_elements(amb: AmbientGL2, S) -> list[int]:
    if amb.n == 2:
        return [amb.identity]
    neg = (-1) % amb.n
    return [
        i
        for i in S
        if amb.det[i] == neg and amb.trace[i] == 0 and amb.mul[i, i] == amb.identity
    ]


def _interval_subgroups_above(amb: AmbientGL2, sigma: int, M) -> set[frozenset]:
    """All subgroups of the abelian group M that contain sigma."""
    base = amb.closure([sigma])
    found = {base}
    frontier = [base]
    M = sorted(M)
    while frontier:
        H = frontier.pop()
        for a in M:
            if a in H:
                continue
            Hn = amb.closure(list(H) + [a])
            if Hn not in found:
                found.add(Hn)
                frontier.append(Hn)
    return found


@dataclass(frozen=True)
class AbelianCandidate:
    subgroup: Gl2Subgroup
    fingerprint: frozenset[tuple[int, int]]
    invariants: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.subgroup.order


@lru_cache(maxsize=None)
def abelian_candidates(n: int) -> tuple[AbelianCandidate, ...]:
    """Abelian subgroups of GL(2, Z/nZ) satisfying the necessary image
    constraints (surjective determinant; a conjugation-compatible element),
    canonicalized by (order, invariant factors, fingerprint).

    Every abelian subgroup lies in some maximal abelian subgroup and every
    qualifying one contains a conjugation element, so seeding interval
    searches at those elements inside every maximal abelian subgroup is
    exhaustive.  Conjugate copies collapse onto one entry; the certifier
    only consumes conjugation-invariant data, so nothing is lost.
    """
    if not 2 <= n <= MAX_MODULUS:
        raise UnsupportedModulus(f"abelian candidates need 2 <= n <= {MAX_MODULUS}")
    amb = ambient(n)
    candidates: dict = {}
    for M in _maximal_abelian_subgroups(amb):
        sigmas = _conjugation_elements(amb, M)
        handled: set[frozenset] = set()
        for sigma in sigmas:
            for H in _interval_subgroups_above(amb, sigma, M):
                if H in handled:
                    continue
                handled.add(H)
                if not _image_constraints_hold(amb, H):
                    continue
                G = _subgroup_from_indices(amb, H)
                inv = _abelian_invariants_from_orders(amb, sorted(H))
                key = (len(H), inv, G.fingerprint())
                if key not in candidates:
                    candidates[key] = AbelianCandidate(G, G.fingerprint(), inv)
    return tuple(
        sorted(
            candidates.values(),
            key=lambda c: (c.order, c.invariants, sorted(c.fingerprint)),
        )
    )
