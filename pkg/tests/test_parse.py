import pytest

from paratensor.algebra import Q, QI, QW, Poly, RationalFunction, Scalar, quadratic_field
from paratensor.parse import ParseError, parse_differential_parts, parse_rational, parse_scalar


def test_scalars():
    assert parse_scalar("3") == 3
    assert parse_scalar("-7/21") == Scalar(-1) / 3
    assert parse_scalar("(1+w)/3", QW) == Scalar(1, 1, QW) / 3
    assert parse_scalar(" 2 - 3*i ", QI) == Scalar(2, -3, QI)
    assert parse_scalar("s^2", quadratic_field(11)) == -11


def test_generator_outside_its_field_is_an_error():
    with pytest.raises(ParseError):
        parse_scalar("i")
    with pytest.raises(ParseError):
        parse_rational("z^2 + w", QI)
    with pytest.raises(ParseError):
        parse_scalar("z")


def test_maps():
    r = parse_rational("(z^2+1)^2 / (4*z*(z^2-1))")
    assert r.degree == 4
    assert r.num == Poly([Scalar(c) for c in (1, 0, 2, 0, 1)]) * (Scalar(1) / 4)
    assert r.den == Poly([Scalar(c) for c in (0, -1, 0, 1)])
    assert parse_rational("z^-2") == RationalFunction.z() ** -2
    assert parse_rational("1/z") == RationalFunction.z().inverse()


def test_whitespace_insensitive():
    assert parse_rational("  2 * z ^ 2 - 1 ") == parse_rational("2*z^2-1")


@pytest.mark.parametrize("text", ["", "z^", "(z+1", "z+*2", "1/0", "z^z", "0^-1", "z $ 2"])
def test_malformed(text):
    with pytest.raises((ParseError, ZeroDivisionError)):
        parse_rational(text)


def test_differentials():
    R, k = parse_differential_parts("1/(z^3-z) dz^2")
    assert k == 2 and R == parse_rational("1/(z^3-z)")
    R, k = parse_differential_parts("(z-1)^-1 * dz")
    assert k == 1 and R == parse_rational("1/(z-1)")
    R, k = parse_differential_parts("dz", QI)
    assert k == 1 and R == RationalFunction.const(1, QI)
    assert parse_differential_parts("z^-1 dz^3", QW) == (parse_rational("1/z", QW), 3)


@pytest.mark.parametrize("text", ["z^2", "dz^0", "1/z dx", "dz^2/(z^2-1)"])
def test_malformed_differentials(text):
    with pytest.raises(ParseError):
        parse_differential_parts(text)


def test_printing_round_trips():
    for text in ["(z^2+1)^2 / (4*z*(z^2-1))", "-1/(z^2-1)", "z^3 - 3*z", "(2-z)/(z+1)"]:
        r = parse_rational(text)
        assert parse_rational(r.to_str()) == r
    for text in ["(1+2*w)/3*z + w", "i*z^2 - 1/(z-i)"]:
        F = QW if "w" in text else QI
        r = parse_rational(text, F)
        assert parse_rational(r.to_str(), F) == r
    assert parse_rational("z").field == Q
