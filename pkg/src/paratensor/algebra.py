"""Exact scalars and dense univariate polynomials.

Scalars live in Q or in an imaginary quadratic field Q(theta), stored as
``a + b*theta`` with rational ``a``, ``b``.  The generator satisfies
``theta**2 == c1*theta + c0``.  Every field is declared up front and
operations between different fields raise :class:`FieldMismatchError`;
the only implicit conversion is from plain integers and rationals.

Polynomials are tuples of coefficients, lowest degree first, with no
trailing zeros.  The zero polynomial has degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq, mpz, isqrt, is_square

__all__ = [
    "Field", "Q", "QI", "QW", "quadratic_field", "field_from_flag",
    "FieldMismatchError", "Scalar", "Poly", "RationalFunction", "INF",
    "poly_gcd", "resultant", "squarefree_part", "squarefree_decomposition",
    "multiplicity", "interpolate", "sqrt_in_field",
]


class FieldMismatchError(ValueError):
    """Raised when values from two different declared fields meet."""


@dataclass(frozen=True)
class Field:
    tag: str
    symbol: str
    c1: int
    c0: int
    D: int = 0

    @property
    def is_rational(self) -> bool:
        return self.symbol == ""

    def __repr__(self) -> str:
        return self.tag

    def flag(self) -> str:
        if self is Q or self == Q:
            return "q"
        if self == QI:
            return "qi"
        if self == QW:
            return "qw"
        return f"qd:{self.D}"

    def zero(self) -> Scalar:
        return Scalar._make(_ZERO, _ZERO, self)

    def one(self) -> Scalar:
        return Scalar._make(_ONE, _ZERO, self)

    def gen(self) -> Scalar:
        if self.is_rational:
            raise ValueError("Q has no quadratic generator")
        return Scalar._make(_ZERO, _ONE, self)

    def __call__(self, a=0, b=0) -> Scalar:
        return Scalar(a, b, self)


Q = Field("Q", "", 0, 0)
QI = Field("Q(i)", "i", 0, -1, 1)
# w is a primitive cube root of unity: w^2 + w + 1 = 0
QW = Field("Q(w)", "w", -1, -1, 3)


def _squarefree(n: int) -> bool:
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def quadratic_field(D: int) -> Field:
    """Q(sqrt(-D)) with generator s, s^2 = -D, for squarefree D > 0."""
    D = int(D)
    if D <= 0 or not _squarefree(D):
        raise ValueError(f"D must be a squarefree positive integer, got {D}")
    return Field(f"Q(sqrt-{D})", "s", 0, -D, D)


def field_from_flag(flag: str) -> Field:
    flag = flag.strip().lower()
    if flag == "q":
        return Q
    if flag == "qi":
        return QI
    if flag == "qw":
        return QW
    if flag.startswith("qd:"):
        return quadratic_field(int(flag[3:]))
    raise ValueError(f"unknown field flag {flag!r} (expected q, qi, qw or qd:D)")


_ZERO = mpq(0)
_ONE = mpq(1)
_RATIONAL_TYPES = (int, mpz, type(_ZERO), Fraction)


def _q(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


class Scalar:
    """An element ``a + b*theta`` of a declared field."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a=0, b=0, field: Field = Q):
        a, b = _q(a), _q(b)
        if field.is_rational and b:
            raise ValueError("a rational scalar cannot carry a generator part")
        self.a = a
        self.b = b
        self.field = field

    @classmethod
    def _make(cls, a, b, field):
        s = object.__new__(cls)
        s.a = a
        s.b = b
        s.field = field
        return s

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, _RATIONAL_TYPES):
            return Scalar._make(_q(other), _ZERO, self.field)
        return NotImplemented

    def embed(self, field: Field) -> Scalar:
        """Map a rational scalar into ``field``."""
        if self.field == field:
            return self
        if self.b:
            raise FieldMismatchError(f"cannot embed {self} into {field}")
        return Scalar._make(self.a, _ZERO, field)

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def is_rational(self) -> bool:
        return not self.b

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.a == other.a and self.b == other.b and self.field == other.field
        if isinstance(other, _RATIONAL_TYPES):
            return not self.b and self.a == _q(other)
        return NotImplemented

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.field.tag))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar._make(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(-self.a, -self.b, self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar._make(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.a, self.b, o.a, o.b
        if not b and not d:
            return Scalar._make(a * c, _ZERO, self.field)
        F = self.field
        bd = b * d
        return Scalar._make(a * c + bd * F.c0, a * d + b * c + bd * F.c1, F)

    __rmul__ = __mul__

    def conjugate(self) -> Scalar:
        if not self.b:
            return self
        return Scalar._make(self.a + self.b * self.field.c1, -self.b, self.field)

    def norm(self) -> mpq:
        """Field norm; for Q this is the square, i.e. |x|^2 in every case."""
        a, b, F = self.a, self.b, self.field
        return a * a + a * b * F.c1 - b * b * F.c0

    def trace(self) -> mpq:
        return 2 * self.a + self.b * self.field.c1

    def inverse(self) -> Scalar:
        if not self:
            raise ZeroDivisionError("inverse of zero scalar")
        if not self.b:
            return Scalar._make(1 / self.a, _ZERO, self.field)
        n = self.norm()
        c = self.conjugate()
        return Scalar._make(c.a / n, c.b / n, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.b:
            if not o.a:
                raise ZeroDivisionError("division by zero scalar")
            return Scalar._make(self.a / o.a, self.b / o.a, self.field)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sort_key(self) -> tuple:
        return (self.a, self.b)

    def __repr__(self) -> str:
        return f"Scalar({self}, {self.field})"

    def __str__(self) -> str:
        a, b, sym = self.a, self.b, self.field.symbol
        if not b:
            return _qstr(a)
        if b == 1:
            tail = sym
        elif b == -1:
            tail = "-" + sym
        else:
            tail = f"{_qstr(b)}*{sym}"
        if not a:
            return tail
        if tail.startswith("-"):
            return f"{_qstr(a)}{tail}"
        return f"{_qstr(a)}+{tail}"

    def is_simple(self) -> bool:
        """True when str(self) needs no parentheses as a product factor."""
        return not self.a or not self.b


def _qstr(x: mpq) -> str:
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class _Infinity:
    """The point at infinity of the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def _check_fields(*fields: Field) -> Field:
    f0 = fields[0]
    for f in fields[1:]:
        if f is not f0 and f != f0:
            raise FieldMismatchError(f"{f0} vs {f}")
    return f0


class Poly:
    """Dense univariate polynomial over a declared field (immutable)."""

    __slots__ = ("coeffs", "field", "_hash")

    def __init__(self, coeffs: Iterable = (), field: Field = Q):
        cs = []
        for c in coeffs:
            if isinstance(c, Scalar):
                if c.field != field:
                    c = c.embed(field)
                cs.append(c)
            else:
                cs.append(Scalar._make(_q(c), _ZERO, field))
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list, field: Field) -> Poly:
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        p.field = field
        p._hash = None
        return p

    @classmethod
    def x(cls, field: Field = Q) -> Poly:
        return cls._raw([field.zero(), field.one()], field)

    @classmethod
    def const(cls, c, field: Field = Q) -> Poly:
        if isinstance(c, Scalar):
            if field == Q:
                field = c.field
            return cls._raw([c.embed(field)], field)
        return cls._raw([Scalar._make(_q(c), _ZERO, field)], field)

    @classmethod
    def from_roots(cls, roots: Iterable, field: Field = Q) -> Poly:
        p = cls.const(1, field)
        z = cls.x(field)
        for r in roots:
            p = p * (z - r)
        return p

    def embed(self, field: Field) -> Poly:
        if self.field == field:
            return self
        return Poly._raw([c.embed(field) for c in self.coeffs], field)

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self) -> Scalar:
        if not self.coeffs:
            return self.field.zero()
        return self.coeffs[-1]

    def coeff(self, i: int) -> Scalar:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        inv = lc.inverse()
        return Poly._raw([c * inv for c in self.coeffs], self.field)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- arithmetic ----------------------------------------------------
    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            _check_fields(self.field, other.field)
            return other
        if isinstance(other, Scalar):
            _check_fields(self.field, other.field)
            return Poly._raw([other], self.field)
        if isinstance(other, _RATIONAL_TYPES):
            return Poly._raw([Scalar._make(_q(other), _ZERO, self.field)], self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (Scalar,) + _RATIONAL_TYPES):
            o = self._lift(other).coeffs
            if not o:
                return Poly._raw([], self.field)
            c = o[0]
            return Poly._raw([x * c for x in self.coeffs], self.field)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly._raw([], self.field)
        if self.field.is_rational:
            # fast path on raw rationals
            aa = [c.a for c in a]
            bb = [c.a for c in b]
            out = [_ZERO] * (len(a) + len(b) - 1)
            for i, x in enumerate(aa):
                if not x:
                    continue
                for j, y in enumerate(bb):
                    out[i + j] += x * y
            F = self.field
            return Poly._raw([Scalar._make(c, _ZERO, F) for c in out], F)
        zero = self.field.zero()
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly._raw(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        other = self._lift(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        n = other.degree
        if self.degree < n:
            return Poly._raw([], self.field), self
        inv = other.coeffs[-1].inverse()
        rem = list(self.coeffs)
        quot = [self.field.zero()] * (self.degree - n + 1)
        b = other.coeffs
        for i in range(self.degree - n, -1, -1):
            c = rem[i + n]
            if not c:
                continue
            c = c * inv
            quot[i] = c
            for j in range(n + 1):
                rem[i + j] = rem[i + j] - c * b[j]
        return Poly._raw(quot, self.field), Poly._raw(rem[:n], self.field)

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: Poly) -> bool:
        return not (other % self)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (Scalar,) + _RATIONAL_TYPES):
            if not self.coeffs:
                return other == 0
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.tag, self.coeffs))
        return self._hash

    # -- calculus and substitution --------------------------------------
    def __call__(self, x):
        """Evaluate at a scalar (Horner)."""
        if isinstance(x, Poly):
            return self.compose(x)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.field)

    def compose(self, g: Poly) -> Poly:
        _check_fields(self.field, g.field)
        acc = Poly._raw([], self.field)
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def scale_var(self, c) -> Poly:
        """p(c*z)."""
        c = self._lift(c).coeff(0)
        out = []
        pw = self.field.one()
        for a in self.coeffs:
            out.append(a * pw)
            pw = pw * c
        return Poly._raw(out, self.field)

    def reverse(self, n: int | None = None) -> Poly:
        """z^n * p(1/z); n defaults to the degree."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal length below degree")
        cs = list(self.coeffs) + [self.field.zero()] * (n + 1 - len(self.coeffs))
        return Poly._raw(cs[::-1], self.field)

    def valuation(self) -> int:
        """Order of vanishing at z = 0."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("valuation of the zero polynomial")

    def homogeneous_compose(self, num: Poly, den: Poly, n: int | None = None) -> Poly:
        """sum_i c_i num^i den^(n-i): numerator of p(num/den) times den^n."""
        if n is None:
            n = self.degree
        one = Poly.const(1, self.field)
        num_pows, den_pows = [one], [one]
        for _ in range(self.degree):
            num_pows.append(num_pows[-1] * num)
        for _ in range(n):
            den_pows.append(den_pows[-1] * den)
        acc = Poly._raw([], self.field)
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + num_pows[i] * den_pows[n - i] * c
        return acc

    def content_bits(self) -> int:
        """Largest numerator/denominator bit length among the coefficients."""
        best = 0
        for c in self.coeffs:
            for part in (c.a, c.b):
                best = max(best, part.numerator.bit_length(), part.denominator.bit_length())
        return best

    # -- ordering and printing -----------------------------------------
    def sort_key(self) -> tuple:
        return (self.degree, tuple(c.sort_key() for c in reversed(self.coeffs)))

    def __repr__(self) -> str:
        return f"Poly({self}, {self.field})"

    def to_str(self, var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            neg = False
            if c.is_simple():
                s = str(c)
                if s.startswith("-"):
                    neg, s = True, s[1:]
            else:
                s = f"({c})"
            if mono:
                if s == "1":
                    term = mono
                else:
                    term = f"{s}*{mono}"
            else:
                term = s
            parts.append(("-" if neg else "+", term))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    def __str__(self) -> str:
        return self.to_str()


# ---------------------------------------------------------------------------
# gcd / resultant / squarefree


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is 0."""
    _check_fields(p.field, q.field)
    a, b = p, q
    while b:
        a, b = b, a % b
        b = b.monic()
    return a.monic()


def multiplicity(p: Poly, factor: Poly) -> int:
    """Largest e with factor^e dividing p (p nonzero, factor nonconstant)."""
    if not p:
        raise ValueError("multiplicity in the zero polynomial")
    if factor.is_constant():
        raise ValueError("multiplicity of a constant factor")
    e = 0
    while True:
        q, r = p.divmod(factor)
        if r:
            return e
        p = q
        e += 1


def _resultant_univariate(p: Poly, q: Poly) -> Scalar:
    F = _check_fields(p.field, q.field)
    if not p and not q:
        raise ValueError("resultant of two zero polynomials")
    if not p or not q:
        return F.zero()
    acc = F.one()
    a, b = p, q
    while True:
        m, n = a.degree, b.degree
        if m == 0:
            return acc * a.lc() ** n
        if n == 0:
            return acc * b.lc() ** m
        r = b % a
        if not r:
            return F.zero()
        # res(a, b) = lc(a)^(n - deg r) * res(a, r) = ... * (-1)^(m deg r) res(r, a)
        acc = acc * a.lc() ** (n - r.degree)
        if (m * r.degree) % 2:
            acc = -acc
        a, b = r, a


def resultant(p, q):
    """Resultant of ``p`` and ``q``.

    Univariate inputs (two :class:`Poly`) give a :class:`Scalar`; the sign
    convention is the Sylvester determinant with ``p``'s coefficients in
    the top rows, i.e. ``lc(p)^deg(q) * prod q(alpha)`` over roots of ``p``.

    Bivariate inputs are sequences of :class:`Poly` in a surviving
    variable ``y``, indexed by powers of the eliminated variable; the
    result is the :class:`Poly` in ``y`` obtained by evaluation at enough
    points and interpolation.
    """
    if isinstance(p, Poly) and isinstance(q, Poly):
        return _resultant_univariate(p, q)
    return _resultant_bivariate(list(p), list(q))


def _trim(cs: list[Poly]) -> list[Poly]:
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _resultant_bivariate(P: list[Poly], Qs: list[Poly]) -> Poly:
    P, Qs = _trim(P), _trim(Qs)
    if not P and not Qs:
        raise ValueError("resultant of two zero polynomials")
    fields = [c.field for c in P + Qs]
    F = _check_fields(*fields)
    if not P or not Qs:
        return Poly._raw([], F)
    m, n = len(P) - 1, len(Qs) - 1
    dp = max(c.degree for c in P)
    dq = max(c.degree for c in Qs)
    bound = n * max(dp, 0) + m * max(dq, 0)
    xs, ys = [], []
    t = 0
    while len(xs) < bound + 1:
        y0 = Scalar._make(mpq((t + 1) // 2 if t % 2 else -(t // 2)), _ZERO, F)
        t += 1
        if not P[-1](y0) or not Qs[-1](y0):
            continue
        pe = Poly._raw([c(y0) for c in P], F)
        qe = Poly._raw([c(y0) for c in Qs], F)
        xs.append(y0)
        ys.append(_resultant_univariate(pe, qe))
    return interpolate(xs, ys)


def interpolate(xs: Sequence[Scalar], ys: Sequence[Scalar]) -> Poly:
    """Newton interpolation through distinct nodes."""
    if not xs:
        raise ValueError("no interpolation nodes")
    F = xs[0].field
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    z = Poly.x(F)
    acc = Poly.const(coef[-1], F)
    for i in range(n - 2, -1, -1):
        acc = acc * (z - xs[i]) + coef[i]
    return acc


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic pairwise coprime squarefree a_i with p = c * prod a_i^i.

    Only factors with nonconstant a_i are returned, in increasing multiplicity.
    """
    if not p:
        raise ValueError("squarefree decomposition of the zero polynomial")
    if p.degree < 1:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``p``."""
    if not p:
        raise ValueError("squarefree part of the zero polynomial")
    if p.degree < 1:
        return Poly.const(1, p.field)
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def _rational_sqrt(x: mpq):
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    if is_square(n) and is_square(d):
        return mpq(isqrt(n), isqrt(d))
    return None


def sqrt_in_field(v: Scalar) -> Scalar | None:
    """A square root of ``v`` inside its own field, or None."""
    F = v.field
    if not v:
        return v
    if not v.b:
        r = _rational_sqrt(v.a)
        if r is not None:
            return Scalar._make(r, _ZERO, F)
        if F.is_rational:
            return None
    # s^2 = v with s in F: N(s) = sqrt(N(v)) (norm is positive definite),
    # tr(s)^2 = tr(v) + 2 N(s) and s = (v + N(s)) / tr(s) when tr(s) != 0.
    r = _rational_sqrt(v.norm())
    if r is None:
        return None
    t = _rational_sqrt(v.trace() + 2 * r)
    if t is not None and t:
        s = (v + r) / t
        if s * s == v:
            return s
    if v.b:
        return None
    # trace-zero roots: s = y * (2 theta - c1), (2 theta - c1)^2 = c1^2 + 4 c0
    disc = mpq(F.c1 * F.c1 + 4 * F.c0)
    y = _rational_sqrt(v.a / disc)
    if y is None:
        return None
    s = Scalar._make(-y * F.c1, 2 * y, F)
    return s if s * s == v else None


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """Reduced quotient num/den with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.const(1, num.field)
        _check_fields(num.field, den.field)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        if not num:
            den = Poly.const(1, num.field)
        lc = den.lc()
        if lc != 1:
            inv = lc.inverse()
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num: Poly, den: Poly) -> RationalFunction:
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def z(cls, field: Field = Q) -> RationalFunction:
        return cls._reduced(Poly.x(field), Poly.const(1, field))

    @classmethod
    def const(cls, c, field: Field = Q) -> RationalFunction:
        return cls._reduced(Poly.const(c, field), Poly.const(1, field))

    @property
    def field(self) -> Field:
        return self.num.field

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree, 0)

    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __call__(self, x):
        if x is INF:
            dn, dd = self.num.degree, self.den.degree
            if dn > dd:
                return INF
            if dn < dd:
                return self.field.zero()
            return self.num.lc() / self.den.lc()
        d = self.den(x)
        if not d:
            return INF
        return self.num(x) / d

    def _lift(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            _check_fields(self.field, other.field)
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        if isinstance(other, (Scalar,) + _RATIONAL_TYPES):
            return RationalFunction(Poly.const(other, self.field).embed(self.field))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._reduced(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        # cross-cancel before multiplying keeps intermediate sizes down
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = self.num.exact_div(g1) if g1.degree > 0 else self.num
        d2 = o.den.exact_div(g1) if g1.degree > 0 else o.den
        n2 = o.num.exact_div(g2) if g2.degree > 0 else o.num
        d1 = self.den.exact_div(g2) if g2.degree > 0 else self.den
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int) -> RationalFunction:
        if n < 0:
            return self.inverse() ** (-n)
        # powers of coprime polynomials stay coprime
        return RationalFunction._reduced(self.num ** n, self.den ** n)

    def __eq__(self, other) -> bool:
        o = self._lift(other) if not isinstance(other, RationalFunction) else other
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def derivative(self) -> RationalFunction:
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def compose(self, g: RationalFunction) -> RationalFunction:
        """self(g(z))."""
        _check_fields(self.field, g.field)
        n = max(self.num.degree, self.den.degree, 0)
        top = self.num.homogeneous_compose(g.num, g.den, n)
        bot = self.den.homogeneous_compose(g.num, g.den, n)
        return RationalFunction(top, bot)

    def scale(self, c) -> RationalFunction:
        return RationalFunction._reduced(self.num * c, self.den) if c else RationalFunction.const(0, self.field)

    def to_str(self, var: str = "z") -> str:
        if self.den.degree == 0:
            return self.num.to_str(var)
        def wrap(p: Poly, signed: bool) -> str:
            s = p.to_str(var)
            nterms = sum(1 for c in p.coeffs if c)
            simple = nterms == 1 and p.coeffs[-1].is_simple()
            return s if simple and (signed or not s.startswith("-")) else f"({s})"
        return f"{wrap(self.num, True)} / {wrap(self.den, False)}"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"RationalFunction({self})"
