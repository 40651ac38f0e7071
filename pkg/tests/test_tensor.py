import random
from fractions import Fraction

import pytest

from paratensor.algebra import INF, QI, RationalFunction, Scalar, poly_gcd, squarefree_decomposition
from paratensor.forge import chebyshev, generate, multiplication_map, power_map, CurveSpec
from paratensor.orbifold import classify
from paratensor.ratmap import (
    PointSet, compose, critical_points, local_degree, preimage_of_pointset, preimage_within,
)
from paratensor.tensor import (
    ConstraintViolation, KDifferential, eigenvalue_modulus, minimal_k, parallel_factor,
    pole_exponent, predicted_modulus_squared, pullback, search_parallel, validate_constraints,
)

import oracles
from helpers import D, M, fr, random_differential, random_map

LATTES = "(z^2+1)^2 / (4*z*(z^2-1))"


# -- differentials --------------------------------------------------------


def test_orders_and_degree_sum():
    q = D("1/(z^3-z) dz^2")
    assert q.order_at(Scalar(0)) == -1
    assert q.order_at(Scalar(1)) == -1
    assert q.order_at(INF) == -1
    assert q.order_at(Scalar(5)) == 0
    assert q.total_order() == -4
    q = D("dz")
    assert q.order_at(INF) == -2 and q.poles() == PointSet.infinity()
    q = D("z^2 dz")
    assert q.zeros() == PointSet.of([Scalar(0)]) and q.order_at(INF) == -4


def test_order_on_conjugate_points():
    q = D("(z^2+1)/(z^2+z+1)^3 dz^2")
    assert q.order_on(PointSet(M("z^2+1").num)) == 1
    assert q.order_on(PointSet(M("z^2+z+1").num)) == -3
    assert q.order_on(PointSet.infinity()) == 4 - 4
    assert sum(o * len(S) for S, o in q.divisor()) == -4


def test_pullback_examples():
    assert pullback(M("z^2"), D("dz")) == D("2*z dz")
    for d in (2, 3, 5):
        for k in (1, 2, 3):
            q = D(f"1/z^{k} dz^{k}")
            assert pullback(power_map(d), q) == q.scale(d ** k)
    q = D("1/(1-z^2) dz^2")
    assert pullback(M("2*z^2-1"), q) == q.scale(4)


def test_parallel_factor_examples():
    assert parallel_factor(M("z^3"), D("1/z^2 dz^2")).lam == 9
    assert parallel_factor(M("2*z^2-1"), D("1/(1-z^2) dz^2")).lam == 4
    assert parallel_factor(M("z^2-1"), D("1/(1-z^2) dz^2")) is None
    with pytest.raises(ValueError):
        parallel_factor(M("z^2"), KDifferential(RationalFunction.const(0), 1))


def test_certificate_soundness_and_tamper():
    cert = parallel_factor(M(LATTES), D("1/(z^3-z) dz^2"))
    A, B = cert.identity
    assert not (A - B * cert.lam)
    assert cert.verify()
    assert cert.lam.norm() == 16
    forged = type(cert)(cert.map, cert.differential, cert.lam + 1, cert.k, cert.identity)
    assert not forged.verify()


def test_parallel_over_gaussian_field():
    f = M("i*z^2", QI)
    cert = parallel_factor(f, D("1/z dz", QI))
    assert cert.lam == 2 and cert.modulus_squared == 4


# -- constraint validation ------------------------------------------------------


def test_validation_examples():
    for d in (2, 3):
        for k in (1, 2):
            rep = validate_constraints(power_map(d), D(f"1/z^{k} dz^{k}"))
            assert rep.passed
            assert dict(rep.pole_orders) == {"z": k, "inf": k}
    rep = validate_constraints(M("2*z^2-1"), D("1/(1-z^2) dz^2"))
    assert rep.passed
    assert dict(rep.pole_orders) == {"z^2 - 1": 1, "inf": 2}


def test_manufactured_zero_fails_clause_a():
    # parallel for the rotation z -> -z, with a simple zero at 0
    rep = validate_constraints(M("-z"), D("z dz"))
    assert rep.certified and not rep.clauses["a"][0]
    assert "a" in rep.failed
    with pytest.raises(ConstraintViolation):
        rep.check()
    # degree two: a zero cannot be parallel, but the clauses still catch it
    q = D("(z-3)/(1-z^2) dz^2")
    with pytest.raises(ValueError):
        validate_constraints(M("2*z^2-1"), q)
    rep = validate_constraints(M("2*z^2-1"), q, require_parallel=False)
    assert not rep.certified and rep.failed[0] == "a"


def test_clause_d_names_missing_critical_values():
    q = D("1/z dz")
    rep = validate_constraints(M("-z"), q)
    assert rep.clauses["d"][0]
    rep = validate_constraints(M("z^2-1"), D("1/(z-3) dz^2"), require_parallel=False)
    assert not rep.clauses["d"][0]
    assert "z + 1" in rep.clauses["d"][1]


# -- order bookkeeping ----------------------------------------------------


def _pieces(f, T, q):
    """Split T into pieces with uniform local degree and uniform ord_{f(y)} q."""
    F = f.field
    images = list(q.divisor())
    used = PointSet.empty(F)
    out = []
    for C, o in images:
        piece = preimage_within(f, T, C)
        used = used | piece
        out.append((piece, o))
    out.append((T - used, 0))
    W = squarefree_decomposition(f.wronskian())
    split = []
    for piece, o in out:
        if piece.has_infinity:
            split.append((PointSet.infinity(F), local_degree(f, INF), o))
        rest = piece.poly
        for part, e in W:
            g = poly_gcd(rest, part)
            if g.degree > 0:
                split.append((PointSet(g), e + 1, o))
                rest = rest.exact_div(g)
        if rest.degree > 0:
            split.append((PointSet(rest), 1, o))
    return split


def _check_order_law(f, q):
    p = pullback(f, q)
    k = q.k
    T = p.poles() | p.zeros() | critical_points(f)
    for S, _ in q.divisor():
        T = T | preimage_of_pointset(f, S)
    for piece, e, o in _pieces(f, T, q):
        assert p.order_on(piece) == e * (o + k) - k, (f, q, piece)
    # independent pointwise check at rational points and infinity
    num, den = fr(p.R.num), fr(p.R.den)
    fnum, fden = fr(f.num), fr(f.den)
    qn, qd = fr(q.R.num), fr(q.R.den)

    def ord_at(n, d, x, kk):
        if x == oracles.INF:
            return (len(d) - 1) - (len(n) - 1) - 2 * kk
        return oracles.root_multiplicity(n, x) - oracles.root_multiplicity(d, x)

    pts = [oracles.INF] + [Fraction(t, 2) for t in range(-6, 7)]
    for x in pts:
        y = oracles.map_eval(fnum, fden, x)
        e = oracles.local_degree(fnum, fden, x)
        assert ord_at(num, den, x, k) == e * (ord_at(qn, qd, y, k) + k) - k


def test_order_law_on_100_random_pullbacks():
    rng = random.Random(29)
    for i in range(100):
        f = random_map(rng, rng.randint(1, 4))
        q = random_differential(rng, rng.randint(1, 3), max_poles=4)
        _check_order_law(f, q)


def test_degree_sum_after_pullback():
    rng = random.Random(31)
    for _ in range(60):
        f = random_map(rng, rng.randint(1, 4))
        q = random_differential(rng, rng.randint(1, 3))
        for r in (q, pullback(f, q)):
            assert r.total_order() == -2 * r.k
            assert sum(o * len(S) for S, o in r.divisor()) == -2 * r.k


def test_functoriality_on_50_pairs():
    rng = random.Random(37)
    for _ in range(50):
        f = random_map(rng, rng.randint(1, 3))
        g = random_map(rng, rng.randint(1, 2))
        q = random_differential(rng, rng.randint(1, 2), max_poles=3)
        assert pullback(g, pullback(f, q)) == pullback(compose(f, g), q)


def _pool():
    log1 = D("1/z dz")
    cheb = D("1/(z^2-1) dz^2")
    four = D("1/(z^3-z) dz^2")
    g = lambda m: multiplication_map(CurveSpec(-1, 0), m)
    return [
        (log1, [power_map(2), power_map(3), power_map(-2), power_map(-3)]),
        (cheb, [chebyshev(2), chebyshev(3), chebyshev(2, negate=True), chebyshev(4)]),
        (four, [g(2), g(3)]),
    ]


def test_eigenvalues_multiply_on_50_composed_pairs():
    rng = random.Random(41)
    pool = _pool()
    done = 0
    while done < 50:
        q, maps = rng.choice(pool)
        f, g = rng.choice(maps), rng.choice(maps)
        if f.degree * g.degree > 16:
            continue
        lf, lg = parallel_factor(f, q), parallel_factor(g, q)
        lfg = parallel_factor(compose(f, g), q)
        assert lf and lg and lfg
        assert lfg.lam == lf.lam * lg.lam
        done += 1


# -- search ------------------------------------------------------------


def test_search_examples():
    cert = search_parallel(M("z^2"), classify(M("z^2")), 1)
    assert cert.differential == D("1/z dz") and cert.lam == 2
    f = M("2*z^2-1")
    cert = search_parallel(f, classify(f), 2)
    assert cert.differential.is_proportional_to(D("1/(z^2-1) dz^2")) and cert.lam == 4
    f = M(LATTES)
    cert = search_parallel(f, classify(f), 2)
    assert cert.differential == D("1/(z^3-z) dz^2")
    assert cert.lam.norm() == 16


def test_search_rejects_inadmissible_k():
    f = M(LATTES)
    with pytest.raises(ValueError):
        search_parallel(f, classify(f), 3)
    with pytest.raises(ValueError):
        search_parallel(M("z^2-1"), classify(M("z^2-1")), 2)


def test_minimal_k_examples():
    inf = float("inf")
    assert minimal_k((inf, inf)) == 1
    assert minimal_k((2, 2, inf)) == 2
    assert minimal_k((2, 2, 2, 2)) == 2
    assert minimal_k((3, 3, 3)) == 3
    assert minimal_k((2, 4, 4)) == 4
    assert minimal_k((2, 3, 6)) == 6
    with pytest.raises(ValueError):
        minimal_k((inf, inf, inf))
    with pytest.raises(ValueError):
        minimal_k((2, 3, 7))


def test_pole_exponent():
    assert pole_exponent(float("inf"), 3) == 3
    assert pole_exponent(6, 6) == 5
    with pytest.raises(ValueError):
        pole_exponent(4, 2)


def test_eigenvalue_modulus_examples():
    assert eigenvalue_modulus(2, 2, True).value == 4
    assert eigenvalue_modulus(4, 2, False).value == 4
    assert eigenvalue_modulus(4, 4, False).value == 16
    m = eigenvalue_modulus(2, 3, False)
    assert m.squared and m.value == 8
    assert eigenvalue_modulus(4, 3, False) == (8, False)
    assert predicted_modulus_squared(3, 2, True) == 81
    assert predicted_modulus_squared(4, 3, False) == 64


GENERATED = [
    dict(kind="power", n=2), dict(kind="power", n=-3), dict(kind="cheb", n=3),
    dict(kind="cheb", n=2, negate=True), dict(kind="lattes", a=-1, b=0, m=2),
    dict(kind="lattes", a=0, b=1, m=2), dict(kind="cm", family="j1728", m=2),
    dict(kind="cm", family="j0", m=2, target="333"), dict(kind="cm", family="j0", m=2, target="236"),
]


@pytest.mark.parametrize("params", GENERATED, ids=lambda p: "-".join(str(v) for v in p.values()))
def test_generated_pairs_validate_and_match_prediction(params):
    g = generate(**params)
    sig = classify(g.map)
    k = minimal_k(sig)
    cert = search_parallel(g.map, sig, k)
    assert cert is not None and cert.verify()
    assert validate_constraints(g.map, cert.differential, cert).passed
    assert cert.lam.norm() == predicted_modulus_squared(g.map.degree, k, sig.is_boundary)
    # the pole orders are the ones the weights force
    for S, w in sig.components:
        assert cert.differential.order_on(S) == -pole_exponent(w, k)
