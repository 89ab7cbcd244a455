"""Classical generalized inverse tests."""

import pytest

from weighted_core_ep.classical import (
    drazin,
    group_inverse,
    is_one_four_f_inverse,
    is_one_three_e_inverse,
    moore_penrose,
    one_four_f,
    one_four_f_member,
    one_three_e,
    one_three_e_member,
    weighted_mp,
)
from weighted_core_ep.exceptions import DimensionError, PreconditionError
from weighted_core_ep.linalg import agrees, index, rank
from weighted_core_ep.matrix import Backend, Matrix, Tolerance
from weighted_core_ep.results import InverseKind, NoExist
from weighted_core_ep.verify import certify
from weighted_core_ep.weights import Weight


class TestMoorePenrose:
    def test_paths_agree_exact(self, ex1) -> None:
        assert moore_penrose(ex1.a) == moore_penrose(
            ex1.a, method="factorization"
        )

    def test_paths_agree_float(self, small_pool, float_tol) -> None:
        for instance in small_pool:
            a = instance.a.to_float()
            svd = moore_penrose(a, float_tol, method="svd")
            factored = moore_penrose(a, float_tol, method="factorization")
            assert agrees(svd, factored, float_tol)

    def test_ill_conditioned_full_rank_float(self, float_tol) -> None:
        # condition number near 2e7: the Gram matrices fall below the rank cutoff
        a = Matrix.from_rows([[1, 1], [0, 1e-7]], Backend.FLOAT)
        assert rank(a, float_tol) == 2
        factored = moore_penrose(a, float_tol, method="factorization")
        assert agrees(factored, moore_penrose(a, float_tol, method="svd"), float_tol)
        expected = Matrix.from_rows([[1, -1e7], [0, 1e7]], Backend.FLOAT)
        assert agrees(factored, expected, Tolerance.floating(residual_rel=1e-6))

    def test_svd_refused_on_exact(self, ex1) -> None:
        with pytest.raises(PreconditionError):
            moore_penrose(ex1.a, method="svd")

    def test_zero_matrix(self) -> None:
        assert moore_penrose(Matrix.zeros(2, 3), method="factorization") == (
            Matrix.zeros(3, 2)
        )


class TestDrazin:
    def test_worked_example(self, ex2) -> None:
        assert drazin(ex2.a) == ex2.golden["drazin"]

    def test_worked_example_float(self, ex2_float, float_tol) -> None:
        assert agrees(
            drazin(ex2_float.a, float_tol), ex2_float.golden["drazin"], float_tol
        )

    def test_invertible_gives_inverse(self) -> None:
        a = Matrix.from_rows([[2, 1], [1, 1]])
        assert drazin(a) == Matrix.from_rows([[1, -1], [-1, 2]])

    def test_nilpotent_gives_zero(self) -> None:
        assert drazin(Matrix.from_rows([[0, 1], [0, 0]])).is_zero()

    def test_methods_agree(self, small_pool) -> None:
        for instance in small_pool:
            assert drazin(instance.a, method="cline") == drazin(
                instance.a, cross_check=False
            )

    def test_defining_equations(self, small_pool) -> None:
        for instance in small_pool:
            a = instance.a
            x = drazin(a)
            k = instance.index
            assert a @ x == x @ a
            assert x @ a @ x == x
            assert x @ a.power(k + 1) == a.power(k)

    def test_power_of_drazin_is_group_inverse_of_power(self, small_pool) -> None:
        for instance in small_pool:
            a, k = instance.a, instance.index
            for m in (max(k, 1), k + 1):
                group = group_inverse(a.power(m))
                assert isinstance(group, Matrix)
                assert group == drazin(a).power(m)

    def test_requires_square(self) -> None:
        with pytest.raises(DimensionError):
            drazin(Matrix.zeros(2, 3))


class TestGroupInverse:
    def test_index_one(self) -> None:
        a = Matrix.from_rows([[1, 1], [0, 0]])
        g = group_inverse(a)
        assert isinstance(g, Matrix)
        assert certify(a, g, InverseKind.GROUP).passed

    def test_index_two_has_none(self, ex1) -> None:
        result = group_inverse(ex1.a)
        assert isinstance(result, NoExist)
        assert "index 2" in result.reason


class TestOneThreeE:
    def test_membership(self, ex2) -> None:
        a2 = ex2.a.power(2)
        y = one_three_e(a2, ex2.e)
        assert isinstance(y, Matrix)
        assert is_one_three_e_inverse(a2, y, ex2.e)

    def test_worked_example_member(self, ex2) -> None:
        x = ex2.golden["one_three_e_of_square"]
        assert is_one_three_e_inverse(ex2.a.power(2), x, ex2.e)
        assert not is_one_three_e_inverse(ex2.a, x, ex2.e)

    def test_empty_for_indefinite_weight(self, indefinite_pair) -> None:
        a, e = indefinite_pair
        result = one_three_e(a, e)
        assert isinstance(result, NoExist)

    def test_family_members(self, ex1) -> None:
        y0 = one_three_e(ex1.a, ex1.e)
        assert isinstance(y0, Matrix)
        w = Matrix.from_rows([[1, 0, 2], [0, "1/2", 0], [3, 1, 1]])
        y1 = one_three_e_member(ex1.a, y0, w)
        assert y1 != y0
        assert is_one_three_e_inverse(ex1.a, y1, ex1.e)

    def test_product_invariance(self, instance_pool) -> None:
        # A S = A T for any two {1,3^E} inverses S and T.
        for instance in instance_pool[:60]:
            a, e = instance.a, instance.e
            s = one_three_e(a, e)
            assert isinstance(s, Matrix)
            w = instance.f.matrix
            t = one_three_e_member(a, s, w)
            assert is_one_three_e_inverse(a, t, e)
            assert a @ s == a @ t

    def test_weight_size_checked(self, ex1) -> None:
        with pytest.raises(DimensionError):
            one_three_e(ex1.a, Weight.identity(2))


class TestOneFourF:
    def test_membership(self, ex1) -> None:
        assert ex1.f is not None
        y = one_four_f(ex1.a, ex1.f)
        assert isinstance(y, Matrix)
        assert is_one_four_f_inverse(ex1.a, y, ex1.f)

    def test_family_members(self, ex1) -> None:
        assert ex1.f is not None
        y0 = one_four_f(ex1.a, ex1.f)
        assert isinstance(y0, Matrix)
        w = Matrix.from_rows([[0, 1, 0], [2, 0, 0], [0, 0, 5]])
        y1 = one_four_f_member(ex1.a, y0, w)
        assert is_one_four_f_inverse(ex1.a, y1, ex1.f)

    def test_rectangular(self) -> None:
        a = Matrix.from_rows([[1, 2, 0], [0, 1, 1]])
        f = Weight.validate(
            Matrix.from_rows([[2, 1, 0], [1, 2, 1], [0, 1, 2]]), name="F"
        )
        y = one_four_f(a, f)
        assert isinstance(y, Matrix)
        assert y.shape == (3, 2)


class TestWeightedMp:
    def test_paths_agree_exact(self, ex1) -> None:
        assert ex1.f is not None
        theorem = weighted_mp(ex1.a, ex1.e, ex1.f, path="theorem")
        product = weighted_mp(ex1.a, ex1.e, ex1.f, path="product")
        assert isinstance(theorem, Matrix)
        assert theorem == product
        report = certify(
            ex1.a, theorem, InverseKind.WEIGHTED_MP, e=ex1.e, f=ex1.f
        )
        assert report.passed

    def test_cholesky_path_float(self, ex1_float, float_tol) -> None:
        assert ex1_float.f is not None
        a, e, f = ex1_float.a, ex1_float.e, ex1_float.f
        chol = weighted_mp(a, e, f, float_tol, path="cholesky")
        theorem = weighted_mp(a, e, f, float_tol, path="theorem")
        assert isinstance(chol, Matrix)
        assert isinstance(theorem, Matrix)
        assert agrees(chol, theorem, float_tol)

    def test_cholesky_refused_on_exact(self, ex1) -> None:
        assert ex1.f is not None
        with pytest.raises(PreconditionError):
            weighted_mp(ex1.a, ex1.e, ex1.f, path="cholesky")

    def test_identity_weights_give_moore_penrose(self, ex2) -> None:
        eye = Weight.identity(3)
        assert weighted_mp(ex2.a, eye, eye) == moore_penrose(ex2.a)

    def test_nonexistence_with_indefinite_weight(self, indefinite_pair) -> None:
        a, e = indefinite_pair
        result = weighted_mp(a, e, Weight.identity(2))
        assert isinstance(result, NoExist)

    def test_random_instances(self, small_pool) -> None:
        for instance in small_pool:
            a = instance.a
            x = weighted_mp(a, instance.e, instance.f)
            assert isinstance(x, Matrix)
            k = index(a)
            assert certify(
                a, x, InverseKind.WEIGHTED_MP, e=instance.e, f=instance.f, k=k
            ).passed
