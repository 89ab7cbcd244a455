"""Axiom checks, bundles and certification."""

import pytest

from weighted_core_ep.exceptions import (
    ConstructionError,
    DimensionError,
    MissingWeightError,
)
from weighted_core_ep.matrix import Backend, Matrix
from weighted_core_ep.results import InverseKind
from weighted_core_ep.verify import (
    Axiom,
    AxiomTag,
    axiom_bundle,
    certify,
    check_axioms,
    classify_inverse,
    ensure_certified,
    nullspace_equal,
    range_equal,
)


class TestAxiom:
    def test_indexed_axiom_requires_k(self) -> None:
        with pytest.raises(ValueError, match="takes k"):
            Axiom(AxiomTag.P6K)

    def test_plain_axiom_rejects_k(self) -> None:
        with pytest.raises(ValueError, match="takes k"):
            Axiom(AxiomTag.P1, 2)

    def test_negative_k(self) -> None:
        with pytest.raises(ValueError, match="nonnegative"):
            Axiom(AxiomTag.P8K, -1)

    def test_label_and_equation(self) -> None:
        axiom = Axiom(AxiomTag.P6K, 2)
        assert axiom.label == "P6k(k=2)"
        assert axiom.equation == "XA^(k+1) = A^k"
        assert Axiom(AxiomTag.P7).label == "P7"


class TestCheckAxioms:
    def test_golden_core_ep_passes(self, ex1) -> None:
        x = ex1.golden["core_ep"]
        report = check_axioms(
            ex1.a, x, axiom_bundle(InverseKind.CORE_EP_E, 2), e=ex1.e
        )
        assert report.passed
        assert report.failed == []
        assert [r.axiom for r in report.results] == ["P6k(k=2)", "P7", "P3E"]

    def test_weight_may_be_a_plain_matrix(self, ex1) -> None:
        x = ex1.golden["core_ep"]
        report = check_axioms(ex1.a, x, [Axiom(AxiomTag.P3E)], e=ex1.e.matrix)
        assert report.passed

    def test_failure_lists_axioms(self, ex1) -> None:
        x = ex1.golden["core_ep"].scale(2)
        report = check_axioms(
            ex1.a, x, axiom_bundle(InverseKind.CORE_EP_E, 2), e=ex1.e
        )
        assert not report.passed
        assert report.failed == ["P6k(k=2)", "P7"]
        failing = report.results[0]
        assert failing.residual > 0
        assert failing.tolerance_used == 0.0

    def test_missing_weight(self, ex1) -> None:
        with pytest.raises(MissingWeightError) as info:
            check_axioms(ex1.a, ex1.a, [Axiom(AxiomTag.P4F)])
        assert info.value.weight == "F"
        assert info.value.axiom == "P4F"

    def test_candidate_shape(self) -> None:
        a = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
        with pytest.raises(DimensionError):
            check_axioms(a, a, [Axiom(AxiomTag.P1)])

    def test_square_only_axiom_on_rectangular(self) -> None:
        a = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
        with pytest.raises(DimensionError, match="square"):
            check_axioms(a, a.H, [Axiom(AxiomTag.P5)])

    def test_table(self, ex1) -> None:
        report = certify(
            ex1.a, ex1.golden["core_ep"], InverseKind.CORE_EP_E, e=ex1.e
        )
        lines = report.table().splitlines()
        assert lines[0].split()[:3] == ["axiom", "residual", "status"]
        assert len(lines) == 4
        assert all(" ok " in line for line in lines[1:])


class TestBundles:
    @pytest.mark.parametrize("kind", list(InverseKind))
    def test_every_kind_has_a_bundle(self, kind) -> None:
        assert len(axiom_bundle(kind, 1)) >= 2

    def test_drazin_bundle_carries_index(self) -> None:
        bundle = axiom_bundle(InverseKind.DRAZIN, 3)
        assert bundle[0] == Axiom(AxiomTag.P6K, 3)


class TestCertify:
    def test_index_is_computed(self, ex2) -> None:
        report = certify(ex2.a, ex2.golden["drazin"], InverseKind.DRAZIN)
        assert report.passed
        assert report.results[0].axiom == "P6k(k=2)"

    def test_missing_weights_default_to_identity(self, ex1) -> None:
        x = ex1.golden["core_ep"]
        assert not certify(ex1.a, x, InverseKind.CORE_EP_E).passed
        assert certify(ex1.a, x, InverseKind.CORE_EP_E, e=ex1.e).passed

    def test_moore_penrose_ignores_weights(self, ex1) -> None:
        from weighted_core_ep.linalg import moore_penrose_inverse

        x = moore_penrose_inverse(ex1.a)
        report = certify(ex1.a, x, InverseKind.MOORE_PENROSE, e=ex1.e)
        assert report.passed

    def test_float_backend(self, ex1_float) -> None:
        x = ex1_float.golden["dual_core_ep"]
        report = certify(ex1_float.a, x, InverseKind.DUAL_CORE_EP_F, f=ex1_float.f)
        assert report.backend is Backend.FLOAT
        assert report.passed
        assert all(r.residual < 1e-10 for r in report.results)

    def test_ensure_certified(self, ex1) -> None:
        good = certify(ex1.a, ex1.golden["core_ep"], InverseKind.CORE_EP_E, e=ex1.e)
        ensure_certified(good, "core-EP")
        bad = certify(ex1.a, ex1.a, InverseKind.CORE_EP_E, e=ex1.e)
        with pytest.raises(ConstructionError, match="core-EP failed axioms"):
            ensure_certified(bad, "core-EP")


class TestClassify:
    def test_identity_is_every_inverse(self) -> None:
        eye = Matrix.identity(3)
        assert classify_inverse(eye, eye) == set(InverseKind)

    def test_golden_core_ep(self, ex1) -> None:
        kinds = classify_inverse(ex1.a, ex1.golden["core_ep"], e=ex1.e, f=ex1.f)
        assert InverseKind.CORE_EP_E in kinds
        assert InverseKind.DRAZIN not in kinds

    def test_rectangular_only_checks_rectangular_kinds(self) -> None:
        a = Matrix.from_rows([[1, 0, 0], [0, 1, 0]])
        kinds = classify_inverse(a, a.H)
        assert kinds == {
            InverseKind.MOORE_PENROSE,
            InverseKind.ONE_THREE_E,
            InverseKind.ONE_FOUR_F,
            InverseKind.WEIGHTED_MP,
        }


class TestSubspaces:
    def test_range_equal(self) -> None:
        m = Matrix.from_rows([[1, 2], [2, 4]])
        n = Matrix.from_rows([[3, 0], [6, 0]])
        assert range_equal(m, n)
        assert not range_equal(m, Matrix.identity(2))

    def test_nullspace_equal(self) -> None:
        m = Matrix.from_rows([[1, 1], [2, 2]])
        n = Matrix.from_rows([[5, 5], [0, 0]])
        assert nullspace_equal(m, n)
        assert not nullspace_equal(m, Matrix.from_rows([[1, -1], [0, 0]]))

    def test_dimension_mismatch(self) -> None:
        with pytest.raises(DimensionError):
            range_equal(Matrix.identity(2), Matrix.identity(3))
        with pytest.raises(DimensionError):
            nullspace_equal(Matrix.identity(2), Matrix.identity(3))

