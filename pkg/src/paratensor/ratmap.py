"""Rational self-maps of the projective line and algebraic point sets.

Finite points are never split into individual algebraic numbers: a
point set is a monic squarefree polynomial (its roots) plus a flag for
the point at infinity, and every set operation is a gcd/resultant
computation over the declared field.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable

from .algebra import (
    INF, Field, Poly, Q, RationalFunction, Scalar, poly_gcd, resultant,
    squarefree_decomposition, squarefree_part, sqrt_in_field,
)

__all__ = [
    "RatMap", "PointSet", "PDivisor", "reduce", "compose", "mobius",
    "ramification_divisor", "critical_points", "critical_values",
    "local_degree", "local_degree_on", "image_of_pointset", "image_divisor",
    "preimage_of_pointset", "preimage_within", "MobiusNormalForm", "mobius_normal_form",
    "automorphism_invariant", "AutomorphismInvariant", "conjugate",
]


class RatMap(RationalFunction):
    """A nonconstant rational map, stored reduced with monic denominator."""

    __slots__ = ()

    def __init__(self, num: Poly, den: Poly | None = None):
        super().__init__(num, den)
        if self.is_constant():
            raise ValueError("a rational map must be nonconstant")

    @classmethod
    def from_function(cls, r: RationalFunction) -> RatMap:
        if r.is_constant():
            raise ValueError("a rational map must be nonconstant")
        m = object.__new__(cls)
        m.num, m.den = r.num, r.den
        return m

    @classmethod
    def identity(cls, field: Field = Q) -> RatMap:
        return cls(Poly.x(field))

    def __call__(self, x):
        return RationalFunction.__call__(self, x)

    def compose(self, g: RationalFunction) -> RatMap:
        return RatMap.from_function(RationalFunction.compose(self, g))

    def iterate(self, n: int) -> RatMap:
        out = RatMap.identity(self.field)
        for _ in range(n):
            out = compose(self, out)
        return out

    def swapped(self) -> RatMap:
        """f(1/w) as a map of w, with numerator/denominator reversed in degree(f)."""
        n = self.degree
        return RatMap(self.num.reverse(n), self.den.reverse(n))

    def wronskian(self) -> Poly:
        """num' * den - num * den'; its roots are the finite critical points."""
        return self.num.derivative() * self.den - self.num * self.den.derivative()

    def __repr__(self) -> str:
        return f"RatMap({self})"


def reduce(num: Poly, den: Poly) -> RatMap:
    if not num and not den:
        raise ValueError("numerator and denominator both zero")
    return RatMap(num, den)


def compose(f: RatMap, g: RatMap) -> RatMap:
    """f o g."""
    return RatMap.from_function(RationalFunction.compose(f, g))


def mobius(a, b, c, d, field: Field = Q) -> RatMap:
    """(a z + b) / (c z + d)."""
    a, b, c, d = (_s(t, field) for t in (a, b, c, d))
    if (a * d - b * c).is_zero():
        raise ValueError("singular Moebius matrix")
    z = Poly.x(field)
    return RatMap(z * a + b, z * c + d)


def _s(x, field: Field) -> Scalar:
    if isinstance(x, Scalar):
        return x.embed(field)
    return Scalar(x, 0, field)


def _mobius_matrix(h: RatMap) -> tuple[Scalar, Scalar, Scalar, Scalar]:
    if h.degree != 1:
        raise ValueError("not a Moebius map")
    return h.num.coeff(1), h.num.coeff(0), h.den.coeff(1), h.den.coeff(0)


def mobius_inverse(h: RatMap) -> RatMap:
    a, b, c, d = _mobius_matrix(h)
    return mobius(d, -b, -c, a, h.field)


def conjugate(f: RatMap, h: RatMap) -> RatMap:
    """h o f o h^-1."""
    return compose(h, compose(f, mobius_inverse(h)))


# ---------------------------------------------------------------------------
# point sets and divisors


@dataclass(frozen=True)
class PointSet:
    poly: Poly
    has_infinity: bool = False

    def __post_init__(self):
        p = self.poly
        if not p:
            raise ValueError("a point set needs a nonzero polynomial")
        if p.degree > 0:
            p = squarefree_part(p)
        else:
            p = Poly.const(1, p.field)
        object.__setattr__(self, "poly", p)

    @classmethod
    def empty(cls, field: Field = Q) -> PointSet:
        return cls(Poly.const(1, field), False)

    @classmethod
    def infinity(cls, field: Field = Q) -> PointSet:
        return cls(Poly.const(1, field), True)

    @classmethod
    def of(cls, points: Iterable, field: Field = Q) -> PointSet:
        p = Poly.const(1, field)
        inf = False
        z = Poly.x(field)
        for x in points:
            if x is INF:
                inf = True
            else:
                p = p * (z - x)
        return cls(p, inf)

    @property
    def field(self) -> Field:
        return self.poly.field

    def __len__(self) -> int:
        return self.poly.degree + (1 if self.has_infinity else 0)

    def is_empty(self) -> bool:
        return len(self) == 0

    def is_infinity_only(self) -> bool:
        return self.has_infinity and self.poly.degree == 0

    def __contains__(self, x) -> bool:
        if x is INF:
            return self.has_infinity
        return not self.poly(x)

    def union(self, other: PointSet) -> PointSet:
        g = poly_gcd(self.poly, other.poly)
        return PointSet(self.poly * other.poly.exact_div(g), self.has_infinity or other.has_infinity)

    __or__ = union

    def intersection(self, other: PointSet) -> PointSet:
        return PointSet(poly_gcd(self.poly, other.poly), self.has_infinity and other.has_infinity)

    __and__ = intersection

    def difference(self, other: PointSet) -> PointSet:
        g = poly_gcd(self.poly, other.poly)
        return PointSet(self.poly.exact_div(g), self.has_infinity and not other.has_infinity)

    __sub__ = difference

    def issubset(self, other: PointSet) -> bool:
        return self.difference(other).is_empty()

    __le__ = issubset

    def finite(self) -> PointSet:
        return PointSet(self.poly, False)

    def sort_key(self) -> tuple:
        return (self.poly.sort_key(), self.has_infinity)

    def label(self, var: str = "z") -> str:
        if self.is_infinity_only():
            return "inf"
        s = self.poly.to_str(var)
        return s + " | inf" if self.has_infinity else s

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class PDivisor:
    """Integer combination of point classes; terms are coprime squarefree polys."""

    terms: tuple[tuple[Poly, int], ...]
    infinity_mult: int = 0
    field: Field = Q

    def degree(self) -> int:
        return sum(m * p.degree for p, m in self.terms) + self.infinity_mult

    def support(self) -> PointSet:
        p = Poly.const(1, self.field)
        for q, _ in self.terms:
            p = p * q
        return PointSet(p, self.infinity_mult != 0)

    def multiplicity_at(self, x) -> int:
        if x is INF:
            return self.infinity_mult
        for p, m in self.terms:
            if not p(x):
                return m
        return 0


def ramification_divisor(f: RatMap) -> PDivisor:
    """Critical points weighted by local degree minus one (total 2d - 2)."""
    terms = tuple(squarefree_decomposition(f.wronskian()))
    inf = local_degree(f, INF) - 1
    return PDivisor(terms, inf, f.field)


def critical_points(f: RatMap) -> PointSet:
    return ramification_divisor(f).support()


def critical_values(f: RatMap) -> PointSet:
    return image_of_pointset(f, critical_points(f))


def local_degree(f: RatMap, x) -> int:
    """Multiplicity of x as a solution of f(z) = f(x)."""
    if x is INF:
        return local_degree(f.swapped(), f.field.zero())
    x = x if isinstance(x, Scalar) else Scalar(x, 0, f.field)
    y = f(x)
    lin = Poly.x(f.field) - x
    target = f.den if y is INF else f.num - f.den * y
    e = 0
    while True:
        q, r = target.divmod(lin)
        if r:
            return e
        target = q
        e += 1


def local_degree_on(f: RatMap, points: PointSet) -> int:
    """Common local degree at every point of ``points``.

    Raises ``ValueError`` when the points do not share a local degree.
    """
    degs = set()
    if points.has_infinity:
        degs.add(local_degree(f, INF))
    p = points.poly
    if p.degree > 0:
        W = f.wronskian()
        rest = p
        for part, e in squarefree_decomposition(W):
            g = poly_gcd(rest, part)
            if g.degree > 0:
                degs.add(e + 1)
                rest = rest.exact_div(g)
        if rest.degree > 0:
            degs.add(1)
    if len(degs) > 1:
        raise ValueError(f"local degree is not uniform on {points}: {sorted(degs)}")
    return degs.pop() if degs else 1


def _image_poly_with_multiplicity(f: RatMap, s: Poly) -> Poly:
    """res_z(s(z), y*den(z) - num(z)) made monic: prod (y - f(alpha))."""
    F = f.field
    y = Poly.x(F)
    n = max(f.num.degree, f.den.degree)
    rel = [y * f.den.coeff(i) - f.num.coeff(i) for i in range(n + 1)]
    sp = [Poly.const(c, F) for c in s.coeffs]
    R = resultant(sp, rel)
    return R.monic()


def image_divisor(f: RatMap, S: PointSet) -> tuple[Poly, int]:
    """Pushforward of S counted with preimage multiplicity.

    Returns (R, n_inf): R is monic with a root of multiplicity j at each
    finite image point having j preimages in S, and n_inf is the number
    of points of S sent to infinity.
    """
    F = f.field
    if S.field != F:
        raise ValueError(f"point set over {S.field}, map over {F}")
    g = poly_gcd(S.poly, f.den)
    n_inf = g.degree
    s1 = S.poly.exact_div(g) if g.degree > 0 else S.poly
    R = Poly.const(1, F)
    if s1.degree > 0:
        R = _image_poly_with_multiplicity(f, s1)
    if S.has_infinity:
        v = f(INF)
        if v is INF:
            n_inf += 1
        else:
            R = R * (Poly.x(F) - v)
    return R, n_inf


def image_of_pointset(f: RatMap, S: PointSet) -> PointSet:
    R, n_inf = image_divisor(f, S)
    return PointSet(R, n_inf > 0)


def preimage_of_pointset(f: RatMap, S: PointSet) -> PointSet:
    F = f.field
    p = S.poly
    if p.degree > 0:
        top = p.homogeneous_compose(f.num, f.den)
        out = PointSet(top if top else Poly.const(1, F), False)
    else:
        out = PointSet.empty(F)
    if S.has_infinity:
        out = out | PointSet(f.den, False)
    v = f(INF)
    if v in S:
        out = out | PointSet.infinity(F)
    return out


def preimage_within(f: RatMap, B: PointSet, C: PointSet) -> PointSet:
    """Points of B mapped into C; a gcd with B, so no large squarefree parts."""
    F = f.field
    g = Poly.const(1, F)
    if B.poly.degree > 0:
        if C.poly.degree > 0:
            top = C.poly.homogeneous_compose(f.num, f.den)
            g = poly_gcd(B.poly, top)
        if C.has_infinity and f.den.degree > 0:
            g = g * poly_gcd(B.poly, f.den)
    inf = B.has_infinity and f(INF) in C
    return PointSet(g, inf)


# ---------------------------------------------------------------------------
# degree one maps


@dataclass(frozen=True)
class MobiusNormalForm:
    """h o f o h^-1 is z + beta ("translation") or alpha z ("scaling").

    When the fixed points are not defined over the field, ``conjugator``
    is None and ``extension`` holds the discriminant whose square root is
    needed; ``multiplier_poly`` then carries the alpha + 1/alpha relation
    as a monic quadratic, and ``parameter`` is one of its roots if that
    root lies in the field (else None).
    """

    kind: str
    parameter: Scalar | None
    conjugator: RatMap | None
    extension: Scalar | None = None
    multiplier_poly: Poly | None = None
    fixed_points: tuple = dc_field(default=())


def mobius_normal_form(f: RatMap) -> MobiusNormalForm:
    if f.degree != 1:
        raise ValueError(f"degree {f.degree} map has no Moebius normal form")
    F = f.field
    a, b, c, d = _mobius_matrix(f)
    # normalize so the denominator is monic already; the matrix is projective
    if c.is_zero():
        # infinity is fixed: f = (a/d) z + b/d
        alpha = a / d
        beta = b / d
        if alpha == 1:
            return MobiusNormalForm("translation", beta, RatMap.identity(F), fixed_points=(INF,))
        z0 = beta / (1 - alpha)
        h = mobius(1, -z0, 0, 1, F)
        return MobiusNormalForm("scaling", alpha, h, fixed_points=(z0, INF))
    disc = (d - a) * (d - a) + 4 * b * c
    if disc.is_zero():
        z0 = (a - d) / (2 * c)
        h = mobius(0, 1, 1, -z0, F)
        g = conjugate(f, h)
        beta = g.num.coeff(0) / g.den.coeff(0)
        return MobiusNormalForm("translation", beta, h, fixed_points=(z0,))
    root = sqrt_in_field(disc)
    if root is None:
        t = (a + d) * (a + d) / (a * d - b * c)
        mp = Poly([F.one(), -(t - 2), F.one()], F)
        # the multiplier pair {alpha, 1/alpha} may still be defined over F
        r = sqrt_in_field((t - 2) * (t - 2) - 4)
        alpha = ((t - 2) + r) / 2 if r is not None else None
        return MobiusNormalForm("scaling", alpha, None, extension=disc, multiplier_poly=mp)
    z1 = (a - d + root) / (2 * c)
    z2 = (a - d - root) / (2 * c)
    h = mobius(1, -z1, 1, -z2, F)
    g = conjugate(f, h)
    alpha = g.num.coeff(1) / g.den.coeff(0)
    return MobiusNormalForm("scaling", alpha, h, fixed_points=(z1, z2))


def root_of_unity_order(alpha: Scalar, limit: int = 12) -> int | None:
    x = alpha
    for n in range(1, limit + 1):
        if x == 1:
            return n
        x = x * alpha
    return None


@dataclass(frozen=True)
class AutomorphismInvariant:
    map: RatMap
    order: int
    j: int
    differential: object
    lam: Scalar
    certificate: object

    def quotient(self, q) -> RationalFunction | None:
        """g with q = g(z^n) Q, provided f*q = lambda q for this class; else None."""
        return invariant_form(self.map.num.coeff(1), self.order, self.j, q)


def automorphism_invariant(alpha: Scalar, j: int, k: int) -> AutomorphismInvariant:
    """Invariant differential z^j (dz/z)^k of z -> alpha z, certified."""
    from .tensor import KDifferential, parallel_factor

    F = alpha.field
    n = root_of_unity_order(alpha)
    if n is None:
        raise ValueError(f"{alpha} is not a root of unity")
    if not 0 <= j < n:
        raise ValueError(f"j must satisfy 0 <= j < {n}")
    if k < 1:
        raise ValueError("k must be at least 1")
    f = mobius(alpha, 0, 0, 1, F)
    e = j - k
    z = Poly.x(F)
    one = Poly.const(1, F)
    q = KDifferential(RationalFunction(z ** e, one) if e >= 0 else RationalFunction(one, z ** (-e)), k)
    cert = parallel_factor(f, q)
    if cert is None or cert.lam != alpha ** j:
        raise ArithmeticError("invariant differential failed certification")
    return AutomorphismInvariant(f, n, j, q, cert.lam, cert)


def invariant_form(alpha: Scalar, n: int, j: int, q) -> RationalFunction | None:
    """Return g with q = g(z^n) z^j (dz/z)^k when q is parallel for z -> alpha z."""
    from .tensor import parallel_factor

    F = alpha.field
    f = mobius(alpha, 0, 0, 1, F)
    cert = parallel_factor(f, q)
    if cert is None or cert.lam != alpha ** j:
        return None
    k = q.k
    z = RationalFunction.z(F)
    G = q.R * z ** (k - j)
    return _as_function_of_power(G, n)


def _as_function_of_power(G: RationalFunction, n: int) -> RationalFunction | None:
    def split(p: Poly):
        if not p:
            return 0, p
        v = p.valuation()
        exps = [i for i, c in enumerate(p.coeffs) if c]
        if any((e - v) % n for e in exps):
            return None
        return v, Poly([p.coeffs[i] for i in range(v, p.degree + 1, n)], p.field)

    a = split(G.num)
    b = split(G.den)
    if a is None or b is None:
        return None
    (va, pa), (vb, pb) = a, b
    if (va - vb) % n:
        return None
    w = RationalFunction.z(G.field)
    return RationalFunction(pa, pb) * w ** ((va - vb) // n)
