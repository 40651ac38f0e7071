"""Meromorphic k-differentials q = R(z) dz^k and the parallel condition f*q = lambda q."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .algebra import INF, Field, Poly, RationalFunction, Scalar, poly_gcd, squarefree_decomposition
from .ratmap import PointSet, RatMap, critical_values

__all__ = [
    "KDifferential", "ParallelCertificate", "ConstraintReport", "ConstraintViolation",
    "pullback", "parallel_factor", "validate_constraints", "search_parallel",
    "minimal_k", "eigenvalue_modulus", "EigenvalueModulus", "pole_exponent",
]

# pole orders allowed by a parabolic orbifold, as fractions of k
_ALLOWED_POLE_FRACTIONS = {Fraction(1)} | {1 - Fraction(1, n) for n in (2, 3, 4, 6)}


class KDifferential:
    """q = R(z) dz^k.

    Orders are read off the reduced R; at infinity the chart change
    w = 1/z contributes -2k, so the orders always sum to -2k.
    """

    __slots__ = ("R", "k")

    def __init__(self, R: RationalFunction, k: int):
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"k must be a positive integer, got {k!r}")
        if not isinstance(R, RationalFunction):
            raise TypeError("R must be a RationalFunction")
        self.R = RationalFunction._reduced(R.num, R.den) if type(R) is not RationalFunction else R
        self.k = k
        if not self.is_zero() and self.total_order() != -2 * k:
            raise ArithmeticError("orders of a k-differential must sum to -2k")

    @classmethod
    def from_parts(cls, num: Poly, den: Poly, k: int) -> KDifferential:
        return cls(RationalFunction(num, den), k)

    @property
    def field(self) -> Field:
        return self.R.field

    def is_zero(self) -> bool:
        return self.R.is_zero()

    def order_at(self, x) -> int:
        if self.is_zero():
            raise ValueError("order of the zero differential")
        num, den = self.R.num, self.R.den
        if x is INF:
            return den.degree - num.degree - 2 * self.k
        x = x if isinstance(x, Scalar) else Scalar(x, 0, self.field)
        lin = Poly.x(self.field) - x
        return _order(num, lin) - _order(den, lin)

    def order_on(self, points: PointSet) -> int:
        """Common order on a point class; ValueError if it is not uniform."""
        orders = set()
        if points.has_infinity:
            orders.add(self.order_at(INF))
        p = points.poly
        if p.degree > 0:
            for part, e in self._split(p):
                orders.add(e)
        if len(orders) != 1:
            raise ValueError(f"order is not uniform on {points}")
        return orders.pop()

    def _split(self, p: Poly) -> list[tuple[Poly, int]]:
        # pieces of p on which the order is constant
        out = []
        rest = p
        for sign, poly in ((1, self.R.num), (-1, self.R.den)):
            if poly.degree < 1:
                continue
            for part, e in squarefree_decomposition(poly):
                g = poly_gcd(rest, part)
                if g.degree > 0:
                    out.append((g, sign * e))
                    rest = rest.exact_div(g)
        if rest.degree > 0:
            out.append((rest, 0))
        return out

    def divisor(self) -> list[tuple[PointSet, int]]:
        """Zeros and poles as (point class, order), infinity last."""
        F = self.field
        out = []
        for sign, poly in ((1, self.R.num), (-1, self.R.den)):
            if poly.degree > 0:
                for part, e in squarefree_decomposition(poly):
                    out.append((PointSet(part, False), sign * e))
        out.sort(key=lambda t: (t[1], t[0].sort_key()))
        o = self.order_at(INF)
        if o:
            out.append((PointSet.infinity(F), o))
        return out

    def poles(self) -> PointSet:
        inf = self.order_at(INF) < 0
        return PointSet(self.R.den if self.R.den.degree > 0 else Poly.const(1, self.field), inf)

    def zeros(self) -> PointSet:
        inf = self.order_at(INF) > 0
        return PointSet(self.R.num if self.R.num.degree > 0 else Poly.const(1, self.field), inf)

    def total_order(self) -> int:
        finite = self.R.num.degree - self.R.den.degree
        return finite + self.order_at(INF)

    def scale(self, c) -> KDifferential:
        return KDifferential(self.R.scale(c), self.k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KDifferential):
            return NotImplemented
        return self.k == other.k and self.R == other.R

    def __hash__(self) -> int:
        return hash((self.R, self.k))

    def is_proportional_to(self, other: KDifferential) -> bool:
        if self.k != other.k or self.is_zero() or other.is_zero():
            return False
        if self.R.den != other.R.den:
            return False
        c = self.R.num.lc() / other.R.num.lc()
        return self.R.num == other.R.num * c

    def to_str(self) -> str:
        dz = "dz" if self.k == 1 else f"dz^{self.k}"
        R = self.R
        if R.num.degree == 0 and R.den.degree == 0 and R.num.lc() == 1:
            return dz
        text = R.to_str()
        if R.den.degree > 0 or sum(1 for c in R.num.coeffs if c) > 1:
            text = f"({text})" if R.den.degree == 0 else text
        return f"{text} {dz}"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"KDifferential({self})"


def _order(p: Poly, lin: Poly) -> int:
    e = 0
    while True:
        q, r = p.divmod(lin)
        if r:
            return e
        p = q
        e += 1


def pullback(f: RatMap, q: KDifferential) -> KDifferential:
    """f*q = R(f(z)) f'(z)^k dz^k."""
    if f.field != q.field:
        raise ValueError(f"map over {f.field}, differential over {q.field}")
    if q.is_zero():
        return q
    return KDifferential(q.R.compose(f) * f.derivative() ** q.k, q.k)


@dataclass(frozen=True)
class ParallelCertificate:
    """Witness of f*q = lam q.

    ``identity`` holds (A, B) with A = num(f*q) * den(q) and
    B = num(q) * den(f*q); the claim is A - lam B = 0.
    """

    map: RatMap
    differential: KDifferential
    lam: Scalar
    k: int
    identity: tuple[Poly, Poly]

    def verify(self) -> bool:
        A, B = self.identity
        if A - B * self.lam:
            return False
        fresh = pullback(self.map, self.differential)
        return (fresh.R.num * self.differential.R.den == A
                and self.differential.R.num * fresh.R.den == B)

    @property
    def modulus_squared(self):
        """|lam|^2: the field norm (a square for rationals)."""
        return self.lam.norm()


def parallel_factor(f: RatMap, q: KDifferential) -> ParallelCertificate | None:
    """lambda with f*q = lambda q, or None when q is not parallel for f."""
    if q.is_zero():
        raise ValueError("the zero differential is parallel to everything")
    if f.degree < 1:
        raise ValueError("map must be nonconstant")
    p = pullback(f, q)
    A = p.R.num * q.R.den
    B = q.R.num * p.R.den
    if A.degree != B.degree:
        return None
    lam = A.lc() / B.lc()
    if A - B * lam:
        return None
    return ParallelCertificate(f, q, lam, q.k, (A, B))


class ConstraintViolation(ArithmeticError):
    def __init__(self, failed: list[str]):
        super().__init__("violated: " + ", ".join(failed))
        self.failed = failed


@dataclass(frozen=True)
class ConstraintReport:
    """Outcome of the structural checks on a parallel pair.

    a: q has no zeros.  b: every pole order m has k/2 <= m <= k.
    c: every pole order is k or (1 - 1/n) k, n in {2, 3, 4, 6}.
    d: every critical value of f is a pole of q.
    """

    clauses: dict
    pole_orders: tuple
    certified: bool = True

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.clauses.values())

    @property
    def failed(self) -> list[str]:
        return [name for name, (ok, _) in sorted(self.clauses.items()) if not ok]

    def check(self) -> ConstraintReport:
        if not self.passed:
            raise ConstraintViolation(self.failed)
        return self


def validate_constraints(f: RatMap, q: KDifferential, cert: ParallelCertificate | None = None,
                         require_parallel: bool = True) -> ConstraintReport:
    """Check clauses a-d on q.

    With ``require_parallel`` false an uncertified pair is still examined
    (useful for negative controls); ``certified`` records which case held.
    """
    if cert is None:
        cert = parallel_factor(f, q)
    certified = cert is not None and cert.verify()
    if require_parallel and not certified:
        raise ValueError("validate_constraints needs a certified parallel pair")
    k = q.k
    div = q.divisor()
    zeros = [(s, o) for s, o in div if o > 0]
    poles = [(s, -o) for s, o in div if o < 0]

    a_ok = not zeros
    a_msg = "no zeros" if a_ok else "zero of order " + ", ".join(f"{o} at {s.label()}" for s, o in zeros)

    bad_b = [(s, m) for s, m in poles if not (Fraction(k, 2) <= m <= k)]
    b_msg = "all pole orders in [k/2, k]" if not bad_b else \
        "; ".join(f"order {m} at {s.label()}" for s, m in bad_b)

    bad_c = [(s, m) for s, m in poles if Fraction(m, k) not in _ALLOWED_POLE_FRACTIONS]
    c_msg = "all pole orders are k or (1-1/n)k" if not bad_c else \
        "; ".join(f"order {m} at {s.label()}" for s, m in bad_c)

    cv = critical_values(f)
    missing = cv.difference(q.poles())
    d_ok = len(missing) == 0
    d_msg = "critical values are poles" if d_ok else f"critical values {missing.label()} are not poles"

    clauses = {
        "a": (a_ok, a_msg),
        "b": (not bad_b, b_msg),
        "c": (not bad_c, c_msg),
        "d": (d_ok, d_msg),
    }
    return ConstraintReport(clauses, tuple((s.label(), m) for s, m in poles), certified)


# ---------------------------------------------------------------------------
# construction from an orbifold signature


def _weights_of(signature) -> list:
    if hasattr(signature, "weights"):
        return list(signature.weights)
    return list(signature)


def _is_parabolic(weights) -> bool:
    return sum(1 - (Fraction(0) if w == math.inf else Fraction(1, w)) for w in weights) == 2


def minimal_k(signature) -> int:
    """Smallest k making every pole order (1 - 1/n) k an integer."""
    weights = _weights_of(signature)
    if not _is_parabolic(weights):
        raise ValueError(f"signature {weights} is not parabolic")
    k = 1
    for w in weights:
        if w != math.inf:
            k = math.lcm(k, int(w))
    return k


def pole_exponent(weight, k: int) -> int:
    """(1 - 1/weight) k, the pole order carried by a point of that weight."""
    if weight == math.inf:
        return k
    e = Fraction(k) * (1 - Fraction(1, int(weight)))
    if e.denominator != 1:
        raise ValueError(f"k={k} is not admissible for weight {weight}")
    return int(e)


def search_parallel(f: RatMap, signature, k: int) -> ParallelCertificate | None:
    """Certify the differential whose poles are forced by the signature.

    ``signature`` must carry ``components``: (PointSet, weight) pairs.
    The candidate is prod p(z)^-(1-1/nu)k over the finite components,
    with the order at infinity forced by the degree sum.
    """
    weights = _weights_of(signature)
    if not _is_parabolic(weights):
        raise ValueError(f"signature {weights} is not parabolic")
    if k < 1 or k % minimal_k(weights):
        raise ValueError(f"k={k} is not admissible for {tuple(weights)}")
    F = f.field
    den = Poly.const(1, F)
    inf_order = 0
    for points, w in signature.components:
        if points.field != F:
            raise ValueError(f"weighted points over {points.field}, map over {F}")
        e = pole_exponent(w, k)
        if points.poly.degree > 0:
            den = den * points.poly ** e
        if points.has_infinity:
            inf_order = -e
    q = KDifferential(RationalFunction(Poly.const(1, F), den), k)
    if q.order_at(INF) != inf_order:
        return None
    return parallel_factor(f, q)


class EigenvalueModulus(NamedTuple):
    value: int
    squared: bool


def eigenvalue_modulus(d: int, k: int, boundary: bool) -> EigenvalueModulus:
    """Predicted |lambda|: d^k on boundary types, d^(k/2) on compact ones.

    When d^(k/2) is not an integer (k odd) the square d^k is returned
    with ``squared`` set.
    """
    if d < 2:
        raise ValueError("degree must be at least 2")
    if boundary:
        return EigenvalueModulus(d ** k, False)
    if k % 2 == 0:
        return EigenvalueModulus(d ** (k // 2), False)
    r = math.isqrt(d)
    if r * r == d:
        return EigenvalueModulus(r ** k, False)
    return EigenvalueModulus(d ** k, True)


def predicted_modulus_squared(d: int, k: int, boundary: bool) -> int:
    """|lambda|^2 as an integer, whatever the parity of k."""
    return d ** (2 * k) if boundary else d ** k
