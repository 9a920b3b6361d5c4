"""The seven-dimensional matrix model, cross product, and sphere census.

The expensive sweeps run once per session (see conftest.py); these tests
read the reports and additionally spot-check frozen values directly.
"""

import math
import random

import pytest

from acx import g2
from acx.errors import InputError
from acx.forms import Form
from acx.scalars import Scalar, SymScalar


def rand_element(rng):
    coords = [rng.randint(-4, 4) for _ in range(14)]
    return g2.G2Element(coords[:6], coords[6:])


class TestElements:
    def test_matrix_roundtrip(self):
        rng = random.Random(11)
        for _ in range(8):
            elem = rand_element(rng)
            assert g2.G2Element.from_matrix(elem.matrix) == elem

    def test_matrix_outside_span_is_rejected(self):
        elem = g2.g2_basis()["f1"]
        rows = [list(row) for row in elem.matrix]
        rows[0][0] = Scalar(1)
        with pytest.raises(InputError):
            g2.G2Element.from_matrix(rows)

    def test_skew_but_non_member_matrix_is_rejected(self):
        rows = [[Scalar(0)] * 7 for _ in range(7)]
        rows[1][2] = Scalar(1)
        rows[2][1] = Scalar(-1)
        with pytest.raises(InputError):
            g2.G2Element.from_matrix(rows)

    def test_shape_validation(self):
        with pytest.raises(InputError):
            g2.G2Element((1, 2), (3,))
        with pytest.raises(InputError):
            g2.G2Element.from_matrix([[Scalar(0)] * 6 for _ in range(6)])

    def test_immutable(self):
        elem = g2.G2Element.zero()
        with pytest.raises(AttributeError):
            elem.x = ()

    def test_bracket_closes_and_is_antisymmetric(self):
        rng = random.Random(12)
        for _ in range(6):
            a, b = rand_element(rng), rand_element(rng)
            ab = g2.bracket(a, b)
            assert isinstance(ab, g2.G2Element)
            assert ab == -g2.bracket(b, a)

    def test_bracket_bilinearity(self):
        rng = random.Random(13)
        a, b, c = (rand_element(rng) for _ in range(3))
        lhs = g2.bracket(a, b + c.scale(3))
        rhs = g2.bracket(a, b) + g2.bracket(a, c).scale(3)
        assert lhs == rhs


class TestBracketTable:
    def test_every_catalogue_entry_is_recomputed(self, bracket_report):
        assert bracket_report.checked == 76

    def test_no_mismatches_and_empty_errata(self, bracket_report):
        assert bracket_report.mismatches == []
        assert bracket_report.unregistered == []
        assert g2.BRACKET_TABLE_ERRATA == {}

    def test_jacobi_sweep_is_clean(self, bracket_report):
        assert bracket_report.jacobi_failures == []
        assert math.comb(14, 3) == 364

    def test_h_span_closes_and_dimension(self, bracket_report):
        assert bracket_report.h_closed
        assert bracket_report.dimension == 14

    def test_report_ok_and_summary(self, bracket_report):
        assert bracket_report.ok
        summary = bracket_report.summary()
        assert summary["checked"] == 76
        assert summary["jacobi_failures"] == 0
        assert summary["dimension"] == 14
        assert summary["ok"] is True


class TestCrossProduct:
    def test_report(self, cross_report):
        assert cross_report.orthogonality_failures == []
        assert cross_report.double_cross_failures == []
        assert cross_report.e1_cross_e6_ok
        assert cross_report.j_table_ok
        assert cross_report.ok

    def test_e1_cross_e6_is_e7(self):
        e1, e6, e7 = (g2.basis_vector(k) for k in (1, 6, 7))
        assert g2.cross(e1, e6) == e7

    def test_calibration_form_spot_value(self):
        cp = g2.cross_product()
        e1, e2, e3 = (g2.basis_vector(k) for k in (1, 2, 3))
        assert cp.phi(e1, e2, e3) == Scalar(1)

    def test_identities_on_random_vectors(self):
        cp = g2.cross_product()
        rng = random.Random(14)
        for _ in range(6):
            u = tuple(Scalar(rng.randint(-3, 3)) for _ in range(7))
            v = tuple(Scalar(rng.randint(-3, 3)) for _ in range(7))
            uv = cp.cross(u, v)
            assert cp.dot(uv, u).is_zero()
            assert cp.dot(uv, v).is_zero()
            lhs = cp.cross(u, uv)
            dot_uv, dot_uu = cp.dot(u, v), cp.dot(u, u)
            rhs = tuple(dot_uv * a - dot_uu * b for a, b in zip(u, v))
            assert lhs == rhs

    def test_commutator_of_members_is_member(self):
        cp = g2.cross_product()
        rng = random.Random(15)
        a, b = rand_element(rng), rand_element(rng)
        assert cp.is_member(a.matrix)
        assert cp.is_member(g2.commutator_matrix(a.matrix, b.matrix))

    def test_plain_rotation_is_not_a_member(self):
        cp = g2.cross_product()
        rows = [[Scalar(0)] * 7 for _ in range(7)]
        rows[1][2] = Scalar(1)
        rows[2][1] = Scalar(-1)
        assert not cp.is_member(rows)

    def test_membership_sample_report(self, membership_report):
        assert membership_report.members_checked == 100
        assert membership_report.nonmembers_checked == 10
        assert membership_report.member_failures == []
        assert membership_report.nonmember_failures == []
        assert membership_report.seed == 20260815
        assert membership_report.ok


class TestProjection:
    def test_report(self, projection_report):
        assert projection_report.kernel_ok
        assert projection_report.image_table_ok
        assert projection_report.intertwine_failures == []
        assert projection_report.preservation_failures == []
        assert projection_report.ok

    def test_differential_spot_values(self):
        basis = g2.g2_basis()
        e2 = g2.basis_vector(2)
        assert g2.projection_differential(basis["f1"]) == tuple(-c for c in e2)
        zero7 = tuple(Scalar(0) for _ in range(7))
        assert g2.projection_differential(basis["h3"]) == zero7


class TestSphereStructure:
    def test_model_shape(self):
        model = g2.s6_model()
        assert model.alg.dim == 14
        assert model.n == 7
        assert model.basic == {1, 2, 3}

    def test_structure_displays(self, structure_report):
        assert structure_report.df_failures == []
        assert structure_report.dbar_phi_failures == []
        assert structure_report.dbar20_failures == []
        assert structure_report.top_form_closed
        assert structure_report.dual_frame_ok
        assert structure_report.ok

    def test_reduction_brackets(self, reduction_report):
        assert reduction_report.checked == 6
        assert reduction_report.unregistered == []
        assert reduction_report.mismatches == [("Xb2", "Xb7")]
        assert reduction_report.ok
        assert reduction_report.summary()["mismatches"] == ["[Xb2,Xb7]"]
        assert set(g2.REDUCTION_BRACKET_ERRATA) == {("Xb2", "Xb7")}


class TestSphereCanonical:
    def test_twist_vanishes(self):
        assert g2.s6_canonical_twist().is_zero()

    def test_plurigenus_levels(self):
        for m in range(1, 9):
            assert g2.s6_plurigenus(m) == 1
        with pytest.raises(InputError):
            g2.s6_plurigenus(0)

    def test_basic_star_spot_values(self):
        gen = Form.phi(7, 1).wedge(Form.phi(7, 2)).wedge(Form.phi(7, 3))
        assert g2.s6_basic_star(gen) == gen.scale(SymScalar.const(Scalar(0, -1)))
        vol_basic = gen.wedge(gen.conjugate()).scale(
            SymScalar.const(Scalar(0, "1/8"))
        )
        assert g2.s6_basic_star(Form.one(7)) == vol_basic

    def test_basic_star_rejects_nonbasic(self):
        with pytest.raises(InputError):
            g2.s6_basic_star(Form.phi(7, 4))


class TestCoframeBundle:
    def test_operator_entries(self):
        bundle = g2.s6_coframe_bundle()
        assert len(bundle.theta) == 3
        for row in bundle.theta:
            for entry in row:
                assert entry == entry.project(0, 1)
        assert bundle.theta[0][0] == Form.phibar(7, 4).scale(
            SymScalar.const(Scalar(0, "1/2"))
        )
        assert bundle.theta[2][2] == Form.phibar(7, 4).scale(
            SymScalar.const(Scalar("-1/2"))
        )

    def test_frame_sections_reproduce_operator(self):
        bundle = g2.s6_coframe_bundle()
        for i in range(3):
            comps = [
                Form.one(7) if j == i else Form.zero(7) for j in range(3)
            ]
            out = bundle.dbar_section(comps)
            assert out == list(bundle.theta[i])

    def test_connection_is_skew_hermitian(self):
        bundle = g2.s6_coframe_bundle()
        omega = bundle.connection()
        for i in range(3):
            for j in range(3):
                assert omega[i][j] == -omega[j][i].conjugate()
                assert omega[i][j].project(0, 1) == bundle.theta[i][j]

    def test_dual_is_involutive(self):
        bundle = g2.s6_coframe_bundle()
        dual = bundle.dual()
        for i in range(3):
            for j in range(3):
                assert dual.theta[i][j] == bundle.theta[j][i].scale(
                    SymScalar.const(-1)
                )
                assert dual.dual().theta[i][j] == bundle.theta[i][j]


class TestSphereCensus:
    def test_kernel_dimensions(self, sphere_census):
        assert sphere_census.h10 == 0
        assert sphere_census.h20 == 0
        assert sphere_census.h13 == 0
        assert sphere_census.h23 == 0

    def test_plurigenera_and_kodaira(self, sphere_census):
        assert list(sphere_census.plurigenera) == [1] * 8
        assert sphere_census.kappa == 0

    def test_duality_transport(self, sphere_census):
        assert sphere_census.serre_bijections_ok
        assert sphere_census.star_generator_ok

    def test_report_ok(self, sphere_census):
        assert sphere_census.ok
        summary = sphere_census.summary()
        assert summary["kodaira_dimension"] == 0
        assert summary["ok"] is True
