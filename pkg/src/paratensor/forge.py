"""Explicit maps for every family that admits a parallel tensor.

Power maps and Chebyshev polynomials cover the two boundary types.  The
compact types come from elliptic curves: the x-line image of [m] on
y^2 = x^3 + a x + b is built from division polynomials, and the curves
with extra automorphisms are pushed down further, through u = x^2
(j = 1728), u = x^3 (j = 0, type (2,3,6)) or the y-coordinate itself
(j = 0, type (3,3,3)).  A twist A o f composes with the Moebius map that
a torsion translation induces on the quotient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache

from .algebra import INF, QI, QW, Field, Poly, Q, RationalFunction, Scalar, poly_gcd, sqrt_in_field
from .orbifold import PARABOLIC_TYPES, OrbifoldSignature
from .ratmap import PointSet, RatMap, compose, image_of_pointset

__all__ = [
    "CurveSpec", "EndoSpec", "TorsionPoint", "Generated",
    "power_map", "chebyshev", "division_polynomial", "multiplication_map",
    "y_multiplier", "cm_quotient_map", "torsion_translations",
    "translation_automorphisms", "twist_by_translation", "endo_degree",
    "CATALOGUE", "generate",
]


# ---------------------------------------------------------------------------
# curves and endomorphisms


@dataclass(frozen=True)
class CurveSpec:
    """y^2 = x^3 + a x + b."""

    a: Scalar
    b: Scalar

    def __init__(self, a, b, field: Field = Q):
        a = a.embed(field) if isinstance(a, Scalar) else Scalar(a, 0, field)
        b = b.embed(field) if isinstance(b, Scalar) else Scalar(b, 0, field)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not self.discriminant():
            raise ValueError(f"singular curve y^2 = x^3 + ({a}) x + ({b})")

    @property
    def field(self) -> Field:
        return self.a.field

    def discriminant(self) -> Scalar:
        return -16 * (4 * self.a ** 3 + 27 * self.b ** 2)

    def cubic(self) -> Poly:
        F = self.field
        return Poly([self.b, self.a, F.zero(), F.one()], F)

    def j_family(self) -> str | None:
        if not self.b:
            return "j1728"
        if not self.a:
            return "j0"
        return None


@dataclass(frozen=True)
class TorsionPoint:
    """A point of C/L fixed by z -> theta z.

    ``coords`` are coordinates in the lattice basis (1, tau); for
    n in {3, 4, 6} tau is the field generator and ``value`` is the point.
    """

    n: int
    coords: tuple[Fraction, Fraction]
    value: Scalar | None = None

    def is_zero(self) -> bool:
        return self.coords == (0, 0)

    def __str__(self) -> str:
        if self.value is not None:
            return str(self.value)
        s, t = self.coords
        return f"{s} + {t}*tau"


@dataclass(frozen=True)
class EndoSpec:
    """z -> alpha z + beta on C (lattice dimension 2) or C* (dimension 1)."""

    multiplier: Scalar
    translation: TorsionPoint | None = None
    lattice_dim: int = 2

    def predicted_degree(self) -> int:
        return endo_degree(self, self.lattice_dim)


def endo_degree(e: EndoSpec, lattice_dim: int) -> int:
    """|m| on C*, the norm |alpha|^2 on a lattice."""
    alpha = e.multiplier if isinstance(e, EndoSpec) else e
    alpha = alpha if isinstance(alpha, Scalar) else Scalar(alpha)
    if lattice_dim == 1:
        if not alpha.is_rational():
            raise ValueError("multiplier on C* must be an integer")
        return abs(int(alpha.a))
    if lattice_dim == 2:
        n = alpha.norm()
        if n.denominator != 1:
            raise ValueError(f"{alpha} is not an algebraic integer")
        return int(n)
    raise ValueError("lattice dimension must be 1 or 2")


# ---------------------------------------------------------------------------
# boundary families


def power_map(n: int, field: Field = Q) -> RatMap:
    if abs(n) < 2:
        raise ValueError("power map needs |n| >= 2")
    z = Poly.x(field)
    one = Poly.const(1, field)
    return RatMap(z ** n) if n > 0 else RatMap(one, z ** (-n))


@lru_cache(maxsize=None)
def _chebyshev_poly(n: int, field: Field) -> Poly:
    z = Poly.x(field)
    prev, cur = Poly.const(1, field), z
    for _ in range(n - 1):
        prev, cur = cur, z * cur * 2 - prev
    return cur if n else prev


def chebyshev(n: int, negate: bool = False, field: Field = Q) -> RatMap:
    """P_n with P_n(cos t) = cos(n t); ``negate`` gives -P_n."""
    if n < 2:
        raise ValueError("Chebyshev map needs n >= 2")
    p = _chebyshev_poly(n, field)
    return RatMap(-p if negate else p)


# ---------------------------------------------------------------------------
# division polynomials
#
# psi_m is stored as (poly in x, e) meaning poly * y^e, with y^2 replaced
# by the cubic as soon as it appears.


def _normalize(p: Poly, e: int, cubic: Poly) -> tuple[Poly, int]:
    while e >= 2:
        p, e = p * cubic, e - 2
    while e < 0:
        p, e = p.exact_div(cubic), e + 2
    return p, e


def _mul(u, v, cubic):
    return _normalize(u[0] * v[0], u[1] + v[1], cubic)


def _sub(u, v, cubic):
    if u[1] != v[1]:
        raise ArithmeticError("y-parity mismatch in division polynomial recurrence")
    return u[0] - v[0], u[1]


@lru_cache(maxsize=None)
def _psi_table(curve: CurveSpec, m: int) -> tuple:
    F = curve.field
    a, b = curve.a, curve.b
    x = Poly.x(F)
    cubic = curve.cubic()
    one = Poly.const(1, F)
    psi = {
        0: (Poly._raw([], F), 0),
        1: (one, 0),
        2: (one * 2, 1),
        3: (x ** 4 * 3 + x ** 2 * (a * 6) + x * (b * 12) - a * a, 0),
        4: ((x ** 6 + x ** 4 * (a * 5) + x ** 3 * (b * 20) - x ** 2 * (a * a * 5)
             - x * (a * b * 4) - b * b * 8 - a ** 3) * 4, 1),
    }
    for n in range(5, m + 3):
        k = n // 2
        if n % 2:
            # psi_{2k+1} = psi_{k+2} psi_k^3 - psi_{k-1} psi_{k+1}^3
            t1 = _mul(psi[k + 2], _mul(psi[k], _mul(psi[k], psi[k], cubic), cubic), cubic)
            t2 = _mul(psi[k - 1], _mul(psi[k + 1], _mul(psi[k + 1], psi[k + 1], cubic), cubic), cubic)
            psi[n] = _sub(t1, t2, cubic)
        else:
            # psi_{2k} = psi_k (psi_{k+2} psi_{k-1}^2 - psi_{k-2} psi_{k+1}^2) / (2y)
            t1 = _mul(psi[k + 2], _mul(psi[k - 1], psi[k - 1], cubic), cubic)
            t2 = _mul(psi[k - 2], _mul(psi[k + 1], psi[k + 1], cubic), cubic)
            inner = _sub(t1, t2, cubic)
            p, e = _mul(psi[k], inner, cubic)
            psi[n] = _normalize(p * Scalar(Fraction(1, 2), 0, F), e - 1, cubic)
    return tuple(psi[i] for i in range(m + 3))


def division_polynomial(curve: CurveSpec, m: int) -> tuple[Poly, int]:
    """psi_m as (p, e) with psi_m = p(x) y^e, e in {0, 1}."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _psi_table(curve, max(m, 4))[m]


def _ratio(num, den, cubic: Poly) -> RationalFunction:
    """(p1 y^e1) / (p2 y^e2) for an even difference e1 - e2."""
    (p1, e1), (p2, e2) = num, den
    d = e1 - e2
    if d % 2:
        raise ArithmeticError("odd y-power in an x-line quotient")
    if d > 0:
        p1 = p1 * cubic ** (d // 2)
    elif d < 0:
        p2 = p2 * cubic ** (-d // 2)
    return RationalFunction(p1, p2)


def multiplication_map(curve: CurveSpec, m: int) -> RatMap:
    """x([m]P) = x - psi_{m-1} psi_{m+1} / psi_m^2."""
    if m < 2:
        raise ValueError("multiplication map needs m >= 2")
    psi = _psi_table(curve, m)
    cubic = curve.cubic()
    x = RationalFunction.z(curve.field)
    ratio = _ratio(_mul(psi[m - 1], psi[m + 1], cubic), _mul(psi[m], psi[m], cubic), cubic)
    return RatMap.from_function(x - ratio)


def y_multiplier(curve: CurveSpec, m: int) -> RationalFunction:
    """y([m]P) / y as a function of x."""
    psi = _psi_table(curve, 2 * m)
    cubic = curve.cubic()
    p4 = _mul(psi[m], psi[m], cubic)
    p4 = _mul(p4, p4, cubic)
    # y([m]P) = psi_2m / (2 psi_m^4), divided by y
    den = _mul(p4, (Poly.const(2, curve.field), 1), cubic)
    return _ratio(psi[2 * m], den, cubic)


# ---------------------------------------------------------------------------
# descent through extra automorphisms


def _in_power(G: RationalFunction, n: int) -> RationalFunction:
    """H with G(z) = H(z^n); ArithmeticError if G is not of that form."""
    def take(p: Poly) -> Poly:
        cs = p.coeffs
        if any(c for i, c in enumerate(cs) if i % n):
            raise ArithmeticError(f"not a function of z^{n}")
        return Poly(cs[::n], p.field)

    return RationalFunction(take(G.num), take(G.den))


def _odd(g: RationalFunction) -> bool:
    minus = RationalFunction(Poly([0, -1], g.field))
    return g.compose(minus) == -g


def _omega_covariant(g: RationalFunction, weight: int) -> bool:
    """g(w x) = w^weight g(x) over Q(w), w^2 + w + 1 = 0."""
    if not g.field.is_rational:
        raise ValueError("covariance check embeds a rational map into Q(w)")
    G = RationalFunction(g.num.embed(QW), g.den.embed(QW))
    wz = RationalFunction(Poly([QW.zero(), QW.gen()], QW))
    return G.compose(wz) == G * QW.gen() ** weight


INF_W = math.inf

CM_TARGETS = {"244": (2, 4, 4), "333": (3, 3, 3), "236": (2, 3, 6)}


def cm_quotient_map(family: str, m: int, target: str | None = None, coefficient=None,
                    field: Field = Q) -> RatMap:
    """Descend [m] on a curve with extra automorphisms.

    j1728: y^2 = x^3 + a x, f(x^2) = g(x)^2 with g the x-line map (odd).
    j0, 236: y^2 = x^3 + b, f(x^3) = g(x)^3 (g is w-covariant).
    j0, 333: quotient by (x, y) -> (w x, y) is the y-line, and
    f(y) = y * rho(y^2 - b) where y([m]P) = y * rho(x^3).
    """
    target = {"j1728": "244"}.get(family, target) if target is None else target
    if family == "j1728":
        if target != "244":
            raise ValueError("the j1728 family descends to (2,4,4) only")
        a = -1 if coefficient is None else coefficient
        curve = CurveSpec(a, 0, field)
        g = multiplication_map(curve, m)
        if not _odd(g):
            raise ArithmeticError("x-line map is not odd; cannot descend through x^2")
        return RatMap.from_function(_in_power(g ** 2, 2))
    if family == "j0":
        b = 1 if coefficient is None else coefficient
        curve = CurveSpec(0, b, field)
        if target == "236":
            g = multiplication_map(curve, m)
            if not _omega_covariant(g, 1):
                raise ArithmeticError("x-line map is not w-covariant; cannot descend through x^3")
            return RatMap.from_function(_in_power(g ** 3, 3))
        if target == "333":
            rho = y_multiplier(curve, m)
            if not _omega_covariant(rho, 0):
                raise ArithmeticError("y-multiplier is not w-invariant; cannot descend to the y-line")
            rt = _in_power(rho, 3)
            F = curve.field
            t = RationalFunction(Poly([-curve.b, F.zero(), F.one()], F))
            return RatMap.from_function(RationalFunction.z(F) * rt.compose(t))
        raise ValueError("the j0 family descends to 333 or 236")
    raise ValueError(f"unknown CM family {family!r}")


# ---------------------------------------------------------------------------
# torsion translations


def torsion_translations(n: int) -> list[TorsionPoint]:
    """Points beta of C/Z[theta] with theta beta = beta, theta of order n.

    Solved directly: (1 - theta) beta must lie in the lattice, so beta
    runs over a grid of step 1/N(1 - theta) in the fundamental domain.
    """
    if n == 2:
        h = Fraction(1, 2)
        return [TorsionPoint(2, (s, t)) for s in (0, h) for t in (0, h)]
    if n not in (3, 4, 6):
        raise ValueError("rotation order must be 2, 3, 4 or 6")
    F = QI if n == 4 else QW
    theta = {3: QW.gen(), 4: QI.gen(), 6: QW.gen() + 1}[n]
    one_minus = 1 - theta
    N = int(one_minus.norm())
    out = []
    for s in range(N):
        for t in range(N):
            beta = Scalar(Fraction(s, N), Fraction(t, N), F)
            prod = one_minus * beta
            if prod.a.denominator == 1 and prod.b.denominator == 1:
                out.append(TorsionPoint(n, (Fraction(s, N), Fraction(t, N)), beta))
    return out


# ---------------------------------------------------------------------------
# twists: Moebius maps permuting the weighted points


def _mat(h: RatMap):
    return (h.num.coeff(1), h.num.coeff(0), h.den.coeff(1), h.den.coeff(0))


def _from_mat(M, F: Field) -> RatMap:
    a, b, c, d = M
    z = Poly.x(F)
    return RatMap(z * a + b, z * c + d)


def _mat_mul(M, N):
    a, b, c, d = M
    e, f, g, h = N
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _to_standard(p, q, r, F: Field):
    """Matrix sending (p, q, r) to (0, 1, inf)."""
    one, zero = F.one(), F.zero()
    if p is INF:
        return (zero, q - r, one, -r)
    if q is INF:
        return (one, -p, one, -r)
    if r is INF:
        return (one, -p, zero, q - p)
    return (q - r, -p * (q - r), q - p, -r * (q - p))


def _adjugate(M):
    a, b, c, d = M
    return (d, -b, -c, a)


def mobius_through(src, dst, F: Field) -> RatMap:
    """The Moebius map sending the triple src to the triple dst."""
    M = _mat_mul(_adjugate(_to_standard(*dst, F)), _to_standard(*src, F))
    return _from_mat(M, F)


def _pair_form(pair: PointSet) -> tuple[Scalar, Scalar, Scalar]:
    """(alpha, beta, gamma) with the pair the zeros of alpha z^2 - beta z w + gamma w^2."""
    p = pair.poly
    F = pair.field
    if pair.has_infinity:
        if p.degree == 1:
            return F.zero(), -F.one(), p.coeff(0)
        return F.zero(), F.zero(), F.one()  # inf paired with itself
    if p.degree == 2:
        return F.one(), -p.coeff(1), p.coeff(0)
    raise ValueError(f"{pair} is not a pair of points")


def _involution_swapping(pairs: list[PointSet], F: Field) -> RatMap | None:
    return _involution_from_forms([_pair_form(p) for p in pairs], F)


def _field_roots(p: Poly) -> tuple[list[Scalar], Poly]:
    """Roots of p lying in its field found by cheap means, and the leftover factor."""
    F = p.field
    roots = []
    rest = p.monic()
    changed = True
    while changed and rest.degree > 0:
        changed = False
        if rest.degree == 1:
            roots.append(-rest.coeff(0))
            rest = Poly.const(1, F)
            break
        if rest.degree == 2:
            b, c = rest.coeff(1), rest.coeff(0)
            s = sqrt_in_field(b * b - 4 * c)
            if s is not None:
                roots.extend([(-b + s) / 2, (-b - s) / 2])
                rest = Poly.const(1, F)
            break
        for r in _rational_root_candidates(rest):
            if not rest(r):
                roots.append(r)
                rest = rest.exact_div(Poly([-r, F.one()], F))
                changed = True
                break
    return roots, rest


def _rational_root_candidates(p: Poly):
    """Rational roots by the rational root test on the rational part of p."""
    F = p.field
    if any(c.b for c in p.coeffs):
        # a rational root kills both coordinates separately
        p0 = Poly([Scalar(c.a) for c in p.coeffs])
        p1 = Poly([Scalar(c.b) for c in p.coeffs])
        g = poly_gcd(p0, p1)
        cands = list(_rational_root_candidates(g)) if g.degree > 0 else []
        yield from (Scalar(r.a, 0, F) for r in cands)
        return
    den = 1
    for c in p.coeffs:
        den = math.lcm(den, int(c.a.denominator))
    ints = [int(c.a * den) for c in p.coeffs]
    while ints and ints[0] == 0:
        yield F.zero()
        return
    lead, const = abs(ints[-1]), abs(ints[0])
    if const > 10 ** 12 or lead > 10 ** 12:
        return
    for q in _divisors(lead):
        for r in _divisors(const):
            for sgn in (1, -1):
                yield Scalar(Fraction(sgn * r, q), 0, F)


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _atoms(S: PointSet) -> list[PointSet]:
    """Split S into single points and irreducible pairs, as far as the field allows."""
    F = S.field
    roots, rest = _field_roots(S.poly) if S.poly.degree > 0 else ([], S.poly)
    atoms = [PointSet(Poly([-r, F.one()], F), False) for r in roots]
    if rest.degree > 0:
        atoms.append(PointSet(rest, False))
    if S.has_infinity:
        atoms.append(PointSet.infinity(F))
    return sorted(atoms, key=PointSet.sort_key)


def _atom_point(atom: PointSet):
    if atom.has_infinity:
        return INF
    return -atom.poly.coeff(0)


def _groups(signature: OrbifoldSignature) -> dict:
    return {w: S for S, w in signature.components}


def translation_automorphisms(signature: OrbifoldSignature) -> list[RatMap]:
    """Moebius maps of order 2 or 3 induced by nonzero fixed translations.

    (ii): swap the two weight-2 points, fix the weight-inf point.
    (iii): the double transpositions of the four weight-2 points.
    (iv): the two 3-cycles of the weight-3 points.
    (v): swap the two weight-4 points, fix the weight-2 point.
    """
    tag = signature.type_tag
    groups = _groups(signature)
    F = next(iter(groups.values())).field if groups else Q
    if tag == "(ii)":
        pair, fixed = groups[2], groups[INF_W]
        A = _involution_fixing(pair, fixed, F)
        return [A] if A is not None else []
    if tag == "(v)":
        A = _involution_fixing(groups[4], groups[2], F)
        return [A] if A is not None else []
    if tag == "(iii)":
        atoms = _atoms(groups[2])
        out = []
        for pairing in _pairings(atoms):
            A = _involution_swapping(pairing, F)
            if A is not None:
                out.append(A)
        return out
    if tag == "(iv)":
        atoms = _atoms(groups[3])
        if len(atoms) != 3:
            raise ValueError("the weight-3 points are not all defined over the field")
        p, q, r = (_atom_point(a) for a in atoms)
        return [mobius_through((p, q, r), (q, r, p), F), mobius_through((p, q, r), (r, p, q), F)]
    raise ValueError(f"type {tag} has no nonzero fixed translation")



def _involution_fixing(pair: PointSet, fixed: PointSet, F: Field) -> RatMap | None:
    # a fixed point is the degenerate pair {r, r}
    if fixed.has_infinity:
        al, be, ga = F.zero(), F.zero(), F.one()
    else:
        r = -fixed.poly.coeff(0)
        al, be, ga = F.one(), 2 * r, r * r
    rows = [_pair_form(pair), (al, be, ga)]
    return _involution_from_forms(rows, F)


def _involution_from_forms(forms, F: Field) -> RatMap | None:
    """(a z + b)/(c z - a) with c gamma - a beta - b alpha = 0 for each form."""
    rows = [(-be, -al, ga) for al, be, ga in forms]
    r1, r2 = rows
    a = r1[1] * r2[2] - r1[2] * r2[1]
    b = r1[2] * r2[0] - r1[0] * r2[2]
    c = r1[0] * r2[1] - r1[1] * r2[0]
    if not (a or b or c) or not (-a * a - b * c):
        return None
    return _from_mat((a, b, c, -a), F)


def _pairings(atoms: list[PointSet]) -> list[list[PointSet]]:
    """Ways to split four points into two pairs without breaking an irreducible pair."""
    singles = [a for a in atoms if len(a) == 1]
    doubles = [a for a in atoms if len(a) == 2]
    if len(doubles) == 2:
        return [doubles]
    if len(doubles) == 1 and len(singles) == 2:
        return [[doubles[0], singles[0] | singles[1]]]
    if len(singles) == 4:
        first = singles[0]
        out = []
        for j in range(1, 4):
            rest = [s for i, s in enumerate(singles[1:], 1) if i != j]
            out.append([first | singles[j], rest[0] | rest[1]])
        return out
    return []


def twist_by_translation(f: RatMap, signature: OrbifoldSignature, which=0) -> RatMap:
    """A o f for the automorphism A of a fixed torsion translation.

    ``which`` is 0 for the identity, an index 1.. into
    translation_automorphisms(signature), or a Moebius map.
    """
    if isinstance(which, RatMap):
        A = which
    elif which == 0:
        return f
    else:
        options = translation_automorphisms(signature)
        if not 1 <= which <= len(options):
            raise ValueError(f"twist index {which} out of range 1..{len(options)}")
        A = options[which - 1]
    for S, w in signature.components:
        if image_of_pointset(A, S) != S:
            raise ValueError(f"twist does not permute the weight-{w} points {S.label()}")
    if not _has_order(A, (2, 3)):
        raise ValueError("twist must have order 2 or 3")
    return compose(A, f)


def _has_order(A: RatMap, orders) -> bool:
    ident = RatMap.identity(A.field)
    B = A
    for n in range(1, max(orders) + 1):
        if B == ident:
            return n in orders
        B = compose(A, B)
    return False


# ---------------------------------------------------------------------------
# catalogue


@dataclass(frozen=True)
class FamilyRow:
    weights: tuple
    type_tag: str
    lift: str
    translations: str
    generators: tuple[str, ...]


CATALOGUE = (
    FamilyRow((INF_W, INF_W), "(i)", "z -> n z, |n| > 1", "none", ("power",)),
    FamilyRow((2, 2, INF_W), "(ii)", "z -> n z + beta", "beta = 0, 1/2", ("cheb",)),
    FamilyRow((2, 2, 2, 2), "(iii)", "z -> alpha z + beta, alpha imaginary quadratic integer",
             "beta in E[2]", ("lattes",)),
    FamilyRow((3, 3, 3), "(iv)", "z -> alpha z + beta, alpha in Z[w]",
             "beta = 0, (2 + w)/3, (1 + 2w)/3", ("cm j0 333",)),
    FamilyRow((2, 4, 4), "(v)", "z -> alpha z + beta, alpha in Z[i]",
             "beta = 0, (1 + i)/2", ("cm j1728 244",)),
    FamilyRow((2, 3, 6), "(vi)", "z -> alpha z, alpha in Z[w]", "none", ("cm j0 236",)),
)


@dataclass(frozen=True)
class Generated:
    map: RatMap
    weights: tuple
    type_tag: str
    endo: EndoSpec
    description: str
    params: dict = dc_field(default_factory=dict)


def generate(kind: str, n: int | None = None, *, negate: bool = False, a=None, b=None,
             m: int | None = None, family: str | None = None, target: str | None = None,
             field: Field = Q) -> Generated:
    """Build one catalogue map with its declared signature."""
    if kind == "power":
        f = power_map(n, field)
        ws = (INF_W, INF_W)
        endo = EndoSpec(Scalar(n, 0, field), None, 1)
        desc = f"z^{n}"
    elif kind == "cheb":
        f = chebyshev(n, negate, field)
        ws = (2, 2, INF_W)
        beta = TorsionPoint(2, (Fraction(1, 2), Fraction(0))) if negate else None
        endo = EndoSpec(Scalar(n, 0, field), beta, 1)
        desc = f"{'-' if negate else ''}P_{n}"
    elif kind == "lattes":
        curve = CurveSpec(a if a is not None else -1, b if b is not None else 0, field)
        f = multiplication_map(curve, m)
        ws = (2, 2, 2, 2)
        endo = EndoSpec(Scalar(m, 0, field), None, 2)
        desc = f"[{m}] on y^2 = x^3 + ({curve.a}) x + ({curve.b})"
    elif kind == "cm":
        f = cm_quotient_map(family, m, target, a if family == "j1728" else b, field)
        tgt = target or "244"
        ws = CM_TARGETS[tgt]
        endo = EndoSpec(Scalar(m, 0, field), None, 2)
        desc = f"[{m}] on the {family} curve descended to {ws}"
    else:
        raise ValueError(f"unknown generator {kind!r}")
    return Generated(f, ws, PARABOLIC_TYPES[ws], endo, desc)
