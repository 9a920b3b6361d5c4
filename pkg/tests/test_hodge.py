"""Metric pairing, star operator, adjoints, and invariant harmonic spaces."""

import pytest

from acx.errors import InputError
from acx.forms import Form, basis_monomials
from acx.hodge import (
    HermitianData,
    SectionContext,
    invariant_harmonic_space,
    serre_pairing_check,
    star_monomial,
    volume_form,
)
from acx.lie import LieAlgebra, ACStructure, LieACS
from acx.models import abelian_model, kt_model
from acx.scalars import PiParam, Scalar, SymScalar
from acx.torus import kt_irregularity, kt_plurigenus


A_PARAMS = [
    PiParam.rational_pi(4),
    PiParam.rational_pi(2),
    PiParam.rational_pi(1),
    PiParam.generic(),
]


class TestStar:
    def test_frozen_low_dimensional_values(self):
        from fractions import Fraction

        bhat, ahat, c = star_monomial(1, (1,), ())
        assert (tuple(bhat), tuple(ahat), c) == ((1,), (), Scalar(0, -1))
        bhat, ahat, c = star_monomial(1, (), (1,))
        assert (tuple(bhat), tuple(ahat), c) == ((), (1,), Scalar(0, 1))
        bhat, ahat, c = star_monomial(1, (), ())
        assert (tuple(bhat), tuple(ahat), c) == ((1,), (1,), Scalar(0, Fraction(1, 2)))
        bhat, ahat, c = star_monomial(2, (1,), (1,))
        assert (tuple(bhat), tuple(ahat)) == ((2,), (2,))
        assert c == Scalar(1)

    def test_star_of_constants_and_volume(self):
        for n in (1, 2, 3):
            model = abelian_model(n)
            data = HermitianData(model)
            assert data.star(Form.one(n)) == volume_form(n)
            assert data.star(volume_form(n)) == Form.one(n)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_closed_form_matches_defining_equation_oracle(self, n):
        data = HermitianData(abelian_model(n))
        for p in range(n + 1):
            for q in range(n + 1):
                for (al, be) in basis_monomials(n, p, q):
                    x = Form.monomial(n, al, be)
                    assert data.star(x) == data.star_oracle(x)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_defining_equation_on_all_monomial_pairs(self, n):
        data = HermitianData(abelian_model(n))
        dV = volume_form(n)
        monos = [
            Form.monomial(n, al, be)
            for p in range(n + 1)
            for q in range(n + 1)
            for (al, be) in basis_monomials(n, p, q)
        ]
        for x in monos:
            for y in monos:
                lhs = dV.scale(data.h(x, y))
                rhs = x.wedge(data.star(y).conjugate()).project(n, n)
                assert lhs == rhs

    def test_pairing_weights_and_sesquilinearity(self):
        n = 2
        data = HermitianData(abelian_model(n))
        one = Form.one(n)
        assert data.h(one, one) == SymScalar.const(1)
        x = Form.phi(n, 1)
        assert data.h(x, x) == SymScalar.const(2)
        top = Form.monomial(n, (1, 2), (1, 2))
        assert data.h(top, top) == SymScalar.const(16)
        i = SymScalar.const(Scalar(0, 1))
        assert data.h(x.scale(i), x) == i * SymScalar.const(2)
        assert data.h(x, x.scale(i)) == -i * SymScalar.const(2)
        assert data.h(x, Form.phibar(n, 1)) == SymScalar.const(0)

    def test_integral_normalization(self):
        for n in (1, 2, 3):
            data = HermitianData(abelian_model(n))
            assert data.integral(volume_form(n)) == SymScalar.const(1)


def _all_monomial_forms(n, p, q):
    return [Form.monomial(n, al, be) for (al, be) in basis_monomials(n, p, q)]


class TestAdjointness:
    @pytest.mark.parametrize("a", A_PARAMS)
    def test_dbar_star_is_the_exact_adjoint_on_kt(self, a):
        model = kt_model(a)
        ctx = SectionContext(model)
        n = model.n
        for p in range(n + 1):
            for q in range(n):
                for x in _all_monomial_forms(n, p, q):
                    for y in _all_monomial_forms(n, p, q + 1):
                        lhs = ctx.inner(ctx.dbar([x]), [y])
                        rhs = ctx.inner([x], ctx.dbar_star([y]))
                        assert lhs == rhs

    def test_dbar_star_is_the_exact_adjoint_on_abelian(self):
        model = abelian_model(2)
        ctx = SectionContext(model)
        for p in range(3):
            for q in range(2):
                for x in _all_monomial_forms(2, p, q):
                    for y in _all_monomial_forms(2, p, q + 1):
                        assert ctx.inner(ctx.dbar([x]), [y]) == ctx.inner(
                            [x], ctx.dbar_star([y])
                        )

    def test_adjointness_inside_a_character_block(self):
        model = kt_model(PiParam.rational_pi(4))
        chars = model.characters(bundle_power=1)
        nontrivial = [ch for ch in chars if not ch.is_trivial()]
        assert nontrivial, "rational-branch model must supply Fourier blocks"
        for ch in nontrivial:
            ctx = SectionContext(model, character=ch)
            for x in _all_monomial_forms(2, 0, 0):
                for y in _all_monomial_forms(2, 0, 1):
                    assert ctx.inner(ctx.dbar([x]), [y]) == ctx.inner(
                        [x], ctx.dbar_star([y])
                    )

    def test_laplacian_is_self_adjoint_and_nonnegative_diagonal(self):
        model = kt_model(PiParam.generic())
        ctx = SectionContext(model)
        for x in _all_monomial_forms(2, 1, 1):
            for y in _all_monomial_forms(2, 1, 1):
                assert ctx.inner(ctx.laplacian([x]), [y]) == ctx.inner(
                    [x], ctx.laplacian([y])
                )


class TestHarmonicSpaces:
    def test_abelian_dimensions_are_binomial_products(self):
        from math import comb

        model = abelian_model(2)
        for p in range(3):
            for q in range(3):
                space = invariant_harmonic_space(model, p, q)
                assert space.dimension == comb(2, p) * comb(2, q)

    @pytest.mark.parametrize("a", A_PARAMS)
    def test_kt_pluricanonical_kernels_match_the_closed_form(self, a):
        model = kt_model(a)
        for m in range(1, 5):
            space = invariant_harmonic_space(model, 0, 0, bundle_power=m)
            assert space.dimension == kt_plurigenus(a, m)

    @pytest.mark.parametrize("a", A_PARAMS)
    def test_kt_irregularity_matches_the_kernel(self, a):
        space = invariant_harmonic_space(kt_model(a), 1, 0)
        assert space.dimension == kt_irregularity(a) == 1

    def test_non_unimodular_input_is_refused(self):
        alg = LieAlgebra(2, {(1, 2): {2: 1}})
        J = ACStructure([[0, -1], [1, 0]])
        model = LieACS(alg, J, name="affine")
        with pytest.raises(InputError):
            invariant_harmonic_space(model, 0, 0)

    def test_serre_pairing_on_flat_models(self):
        model = abelian_model(2)
        for (p, q) in [(0, 0), (1, 0), (1, 1), (2, 1)]:
            report = serre_pairing_check(model, p, q)
            assert report.ok, report.detail

    def test_serre_pairing_on_kt(self):
        model = kt_model(PiParam.rational_pi(4))
        for (p, q) in [(0, 0), (1, 0), (2, 2)]:
            report = serre_pairing_check(model, p, q)
            assert report.ok, report.detail

    def test_blocks_carry_their_characters(self):
        model = kt_model(PiParam.rational_pi(4))
        space = invariant_harmonic_space(model, 0, 0, bundle_power=1)
        keys = {blk.character.key() for blk in space.blocks}
        assert len(keys) == len(space.blocks)
        assert sum(blk.dimension for blk in space.blocks) == space.dimension
