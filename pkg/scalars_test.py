import pytest
from hypothesis import given, strategies as st
from sympy.polys.domains import QQ

from app.scalars import (
    InvalidFieldError,
    ScalarParseError,
    ZeroDivisorError,
    field_make,
    field_preset,
    format_rational,
    format_scalar,
    parse_rational,
    parse_scalar,
    q_integer,
)

rationals = st.builds(lambda p, d: QQ(p, d), st.integers(-20, 20), st.integers(1, 9))


class TestRationals:
    """Текстовая запись p/q"""

    def test_parse_reduces(self):
        assert parse_rational("6/4") == QQ(3, 2)
        assert parse_rational(" -7 ") == QQ(-7)

    def test_format_is_canonical(self):
        assert format_rational(QQ(4, 2)) == "2"
        assert format_rational(QQ(-3, 6)) == "-1/2"

    @pytest.mark.parametrize("text", ["1/0", "abc", "1.5", "2/-3", ""])
    def test_parse_rejects(self, text):
        with pytest.raises(ScalarParseError):
            parse_rational(text)


class TestFields:
    def test_gauss_generator_squares_to_minus_one(self, gauss):
        x = gauss.generator()
        assert x * x == -1
        assert x ** 4 == 1
        assert x ** -1 == -x

    def test_cube_root_inverse(self, cyclo3):
        x = cyclo3.generator()
        assert x.inverse() == cyclo3.from_poly((-1, -1))
        assert q_integer(cyclo3, 3) == 0

    def test_q_integer_over_rationals(self, field_two):
        assert q_integer(field_two, 3) == 7
        assert q_integer(field_two, 0) == 0

    def test_reduction_modulo_min_poly(self, gauss):
        assert gauss.from_poly((0, 0, 1)) == -1

    def test_non_monic_rejected(self):
        with pytest.raises(InvalidFieldError):
            field_make(["1", "2"], ["0"])

    def test_constant_min_poly_rejected(self):
        with pytest.raises(InvalidFieldError):
            field_make(["1"], ["0"])

    def test_zero_divisor_reports_factor(self):
        split = field_make(["-1", "0", "1"], ["0", "1"])
        with pytest.raises(ZeroDivisorError) as error:
            (split.generator() - 1).inverse()
        assert error.value.factor

    def test_division_by_zero(self, field_two):
        with pytest.raises(ZeroDivisionError):
            field_two.one / field_two.zero

    def test_presets(self, field_zero, gauss):
        assert not field_zero.q
        assert format_scalar(gauss.q) == "0,1"
        assert format_scalar(field_preset("Q").q) == "2"

    def test_parse_scalar_lists(self, gauss):
        value = parse_scalar(gauss, ["-1/2", "1/2"])
        assert value == (gauss.q - 1) / 2
        assert format_scalar(value) == "-1/2,1/2"

    def test_mixing_fields_fails(self, gauss, cyclo3):
        with pytest.raises(InvalidFieldError):
            gauss.generator() + cyclo3.generator()

    def test_equality_respects_field(self, gauss, cyclo3):
        assert gauss.generator() != cyclo3.generator()
        assert gauss.one != cyclo3.one
        assert gauss.one == 1 and cyclo3.one == 1

    @given(rationals, rationals)
    def test_text_round_trip(self, a, b):
        gauss = field_preset("gauss")
        value = gauss.from_poly((a, b))
        text = format_scalar(value)
        assert parse_scalar(gauss, text) == value
        assert format_scalar(parse_scalar(gauss, text)) == text


class TestFieldAxioms:
    """Свойства арифметики в Q(i)"""

    @given(rationals, rationals, rationals, rationals)
    def test_division_inverts_multiplication(self, a0, a1, b0, b1):
        gauss = field_preset("gauss")
        a, b = gauss.from_poly((a0, a1)), gauss.from_poly((b0, b1))
        if b:
            assert (a * b) / b == a
            assert b * b.inverse() == 1

    @given(rationals, rationals, rationals)
    def test_distributive(self, a, b, c):
        cyclo3 = field_preset("cyclo3")
        x = cyclo3.generator()
        u, v, w = a + x * b, b - x * c, c * x * x
        assert u * (v + w) == u * v + u * w

    @given(st.integers(0, 8), st.integers(0, 8), st.sampled_from(["Q", "gauss", "cyclo3"]))
    def test_q_integer_additive(self, a, b, preset):
        field_spec = field_preset(preset)
        q = field_spec.q
        assert q_integer(field_spec, a + b) == q_integer(field_spec, a) + q ** a * q_integer(field_spec, b)
