"""Field arithmetic on Gaussian rationals, one-symbol rational functions,
and the structure-parameter wrapper."""

import random
from fractions import Fraction

import pytest

from acx.scalars import (
    PiParam,
    Scalar,
    SymScalar,
    parse_rational,
    scalar_str,
)


def rand_fraction(rng, span=9):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_scalar(rng):
    return Scalar(rand_fraction(rng), rand_fraction(rng))


def rand_poly(rng, deg=2):
    acc = SymScalar.const(rand_scalar(rng))
    for k in range(1, rng.randint(1, deg) + 1):
        acc = acc + SymScalar.symbol(coeff=1, power=k) * SymScalar.const(rand_scalar(rng))
    return acc


def rand_sym(rng, deg=2):
    num = rand_poly(rng, deg)
    den = rand_poly(rng, deg)
    if den.is_zero():
        den = SymScalar.const(1)
    return num / den


class TestScalar:
    def test_complex_multiplication_matches_component_formula(self):
        rng = random.Random(11)
        for _ in range(200):
            a, b = rand_fraction(rng), rand_fraction(rng)
            c, d = rand_fraction(rng), rand_fraction(rng)
            z = Scalar(a, b) * Scalar(c, d)
            assert z == Scalar(a * c - b * d, a * d + b * c)

    def test_inverse_and_division(self):
        rng = random.Random(12)
        for _ in range(200):
            z = rand_scalar(rng)
            if z.is_zero():
                continue
            assert z * z.inverse() == Scalar(1)
            w = rand_scalar(rng)
            assert (w / z) * z == w
        with pytest.raises(ZeroDivisionError):
            Scalar(0).inverse()

    def test_conjugation_is_a_ring_morphism(self):
        rng = random.Random(13)
        for _ in range(100):
            z, w = rand_scalar(rng), rand_scalar(rng)
            assert (z * w).conjugate() == z.conjugate() * w.conjugate()
            assert (z + w).conjugate() == z.conjugate() + w.conjugate()
            assert z.conjugate().conjugate() == z

    def test_norm_is_positive_definite(self):
        rng = random.Random(14)
        for _ in range(100):
            z = rand_scalar(rng)
            nrm = z * z.conjugate()
            assert nrm.im == 0
            assert (nrm.re > 0) == (not z.is_zero())

    def test_coercion_and_equality(self):
        assert Scalar(Fraction(1, 2)) + Fraction(1, 2) == Scalar(1)
        assert Scalar(3) == 3
        assert Scalar(0, 1) != 1
        assert bool(Scalar(0)) is False

    def test_string_forms(self):
        assert scalar_str(Scalar(0)) == "0"
        assert scalar_str(Scalar(1)) == "1"
        assert scalar_str(Scalar(0, 1)) == "i"
        assert scalar_str(Scalar(0, -1)) == "-i"
        assert scalar_str(Scalar(Fraction(1, 2), Fraction(-3, 4))) == "1/2-3/4i"

    def test_parse_rational(self):
        assert parse_rational("39/10") == Fraction(39, 10)
        assert parse_rational("-4") == -4
        with pytest.raises(ValueError):
            parse_rational("x")


class TestSymScalar:
    def test_field_axioms_randomized(self):
        rng = random.Random(21)
        for _ in range(60):
            u, v, w = rand_sym(rng), rand_sym(rng), rand_sym(rng)
            assert (u + v) * w == u * w + v * w
            assert u + v == v + u
            assert (u * v) * w == u * (v * w)
            if not v.is_zero():
                assert (u / v) * v == u

    def test_common_factors_cancel(self):
        x = SymScalar.symbol()
        g = x * x + SymScalar.const(Scalar(0, 1))
        u = (x + 1) / (x * x + 3)
        assert (g * (x + 1)) / (g * (x * x + 3)) == u

    def test_constants_and_symbol(self):
        x = SymScalar.symbol()
        assert SymScalar.const(5).is_constant()
        assert SymScalar.const(5).constant_value() == Scalar(5)
        assert not x.is_constant()
        assert SymScalar.symbol(coeff=Fraction(3, 2), power=2) == SymScalar.const(Fraction(3, 2)) * x * x

    def test_conjugation_fixes_the_real_symbol(self):
        x = SymScalar.symbol()
        i = SymScalar.const(Scalar(0, 1))
        u = (x + i) / (x - i)
        bar = u.conjugate()
        assert bar == (x - i) / (x + i)
        assert bar.conjugate() == u

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            SymScalar.const(1) / SymScalar.const(0)

    def test_rendering(self):
        x = SymScalar.symbol()
        u = SymScalar.const(Scalar(0, -2)) * x * x
        assert u.to_str("pi") == "-2i*pi^2"
        assert SymScalar.const(0).to_str() == "0"


class TestPiParam:
    def test_parse_forms(self):
        assert PiParam.parse("4*pi") == PiParam.rational_pi(4)
        assert PiParam.parse("39/10*pi") == PiParam.rational_pi(Fraction(39, 10))
        assert PiParam.parse("pi") == PiParam.rational_pi(1)
        assert PiParam.parse("-pi") == PiParam.rational_pi(-1)
        assert PiParam.parse("generic") == PiParam.generic()
        assert str(PiParam.parse(" 2/3*PI ")) == "2/3*pi"

    @pytest.mark.parametrize("bad", ["", "4pi", "pi*4", "0*pi", "tau", "1/0*pi"])
    def test_parse_rejections(self, bad):
        with pytest.raises(ValueError):
            PiParam.parse(bad)

    def test_zero_parameter_rejected(self):
        with pytest.raises(ValueError):
            PiParam.rational_pi(0)

    def test_symbol_semantics(self):
        a = PiParam.rational_pi(Fraction(4, 3))
        assert a.symbol_name == "pi"
        assert a.a_value() == SymScalar.symbol(coeff=Fraction(4, 3))
        assert a.pi_value() == SymScalar.symbol()
        g = PiParam.generic()
        assert g.symbol_name == "a"
        assert g.a_value() == SymScalar.symbol()
        with pytest.raises(ValueError):
            g.pi_value()

    def test_immutability_and_hash(self):
        a = PiParam.rational_pi(2)
        with pytest.raises(AttributeError):
            a.q = 3
        assert len({PiParam.rational_pi(2), PiParam.rational_pi(2)}) == 1
