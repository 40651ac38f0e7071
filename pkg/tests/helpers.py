"""Shared builders for tests: random maps, conversions to oracle form."""

from __future__ import annotations

import random
from fractions import Fraction

from paratensor.algebra import Poly, Q, RationalFunction, Scalar
from paratensor.parse import parse_differential_parts, parse_rational
from paratensor.ratmap import RatMap
from paratensor.tensor import KDifferential


def M(text: str, field=Q) -> RatMap:
    return RatMap.from_function(parse_rational(text, field))


def D(text: str, field=Q) -> KDifferential:
    R, k = parse_differential_parts(text, field)
    return KDifferential(R, k)


def fr(poly: Poly) -> list[Fraction]:
    """Rational coefficients as Fractions for the oracles."""
    out = []
    for c in poly.coeffs:
        assert not c.b
        out.append(Fraction(int(c.a.numerator), int(c.a.denominator)))
    return out


def to_fraction(x: Scalar) -> Fraction:
    assert not x.b
    return Fraction(int(x.a.numerator), int(x.a.denominator))


def random_poly(rng: random.Random, degree: int, bound: int = 5, field=Q, monic=False) -> Poly:
    cs = [Scalar(rng.randint(-bound, bound), rng.randint(-bound, bound) if not field.is_rational else 0, field)
          for _ in range(degree)]
    top = Scalar(1, 0, field) if monic else Scalar(rng.choice([i for i in range(-bound, bound + 1) if i]), 0, field)
    return Poly(cs + [top], field)


def random_map(rng: random.Random, degree: int, field=Q) -> RatMap:
    """A random reduced map of exactly the given degree."""
    while True:
        dn = degree if rng.random() < 0.7 else rng.randint(0, degree)
        dd = degree if dn < degree else rng.randint(0, degree)
        num = random_poly(rng, dn, field=field)
        den = random_poly(rng, dd, field=field, monic=True)
        r = RationalFunction(num, den)
        if r.degree == degree:
            return RatMap.from_function(r)


def random_mobius(rng: random.Random, field=Q) -> RatMap:
    while True:
        a, b, c, d = (rng.randint(-4, 4) for _ in range(4))
        if a * d - b * c:
            z = Poly.x(field)
            return RatMap(z * a + b, z * c + d)


def random_differential(rng: random.Random, k: int, max_poles: int = 4) -> KDifferential:
    npoles = rng.randint(1, max_poles)
    den = Poly.const(1)
    for _ in range(npoles):
        den = den * Poly([Scalar(rng.randint(-6, 6)), Scalar(1)])
    num = Poly.const(rng.choice([1, -2, 3]))
    if rng.random() < 0.5:
        num = num * Poly([Scalar(rng.randint(-6, 6)), Scalar(1)])
    return KDifferential(RationalFunction(num, den), k)
