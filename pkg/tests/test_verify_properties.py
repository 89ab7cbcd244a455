"""Randomized checks of certification, classification and subspace tests."""

from __future__ import annotations

from collections.abc import Callable
from itertools import product

import numpy as np
import pytest

from weighted_core_ep.classical import drazin, group_inverse, moore_penrose
from weighted_core_ep.core_ep import core_ep, dual_core_ep
from weighted_core_ep.linalg import index
from weighted_core_ep.matrix import Backend, Matrix, Tolerance
from weighted_core_ep.results import InverseKind, InverseResult
from weighted_core_ep.sampling import positive_definite_weight
from weighted_core_ep.verify import (
    axiom_bundle,
    check_axioms,
    classify_inverse,
    nullspace_equal,
    range_equal,
)
from weighted_core_ep.weights import Weight

pytestmark = pytest.mark.slow

K = InverseKind

NILPOTENT_KINDS = {
    K.DRAZIN,
    K.CORE_EP_E,
    K.DUAL_CORE_EP_F,
    K.STAR_CORE_EP,
    K.DUAL_CORE_EP_STAR,
}


def _passing(report) -> set[str]:
    return {r.axiom for r in report.results if r.passed}


def test_loosening_tolerance_never_fails_an_axiom(small_pool) -> None:
    rng = np.random.default_rng(11)
    ladder = [
        Tolerance.floating(residual_rel=t) for t in (1e-13, 1e-9, 1e-5, 1e-1)
    ]
    for instance in small_pool:
        flt = instance.to_float()
        result = core_ep(flt.a, flt.e, Tolerance.floating(residual_rel=1e-7))
        assert isinstance(result, InverseResult)
        bundle = axiom_bundle(K.CORE_EP_E, instance.index)
        for scale in (0.0, 1e-11, 1e-7, 1e-3):
            noise = rng.standard_normal(result.value.shape) * scale
            candidate = result.value + Matrix(noise.astype(complex), Backend.FLOAT)
            reports = [
                check_axioms(flt.a, candidate, bundle, e=flt.e, tol=t)
                for t in ladder
            ]
            residuals = [[r.residual for r in rep.results] for rep in reports]
            assert all(row == residuals[0] for row in residuals)
            for tight, loose in zip(reports, reports[1:], strict=False):
                assert _passing(tight) <= _passing(loose)


def _relation_table(
    family: list[Matrix], relation: Callable[[Matrix, Matrix], bool]
) -> list[list[bool]]:
    return [[relation(p, q) for q in family] for p in family]


def _assert_equivalence(table: list[list[bool]]) -> None:
    n = len(table)
    for i in range(n):
        assert table[i][i]
    for i, j in product(range(n), repeat=2):
        assert table[i][j] is table[j][i]
    for i, j, l in product(range(n), repeat=3):
        if table[i][j] and table[j][l]:
            assert table[i][l]


def test_range_equal_is_an_equivalence(solved_pool) -> None:
    # Two classes: R(A) and R(A^k).
    for s in solved_pool[:40]:
        a, ak = s.a, s.a.power(s.k)
        family = [a, s.moore_penrose.H, a @ s.e.matrix, ak, s.core_ep, s.drazin]
        _assert_equivalence(_relation_table(family, range_equal))


def test_nullspace_equal_is_an_equivalence(solved_pool) -> None:
    # Two classes: N(A) and N(A^k).
    for s in solved_pool[:40]:
        a, ak = s.a, s.a.power(s.k)
        family = [a, s.moore_penrose.H, ak, s.e.matrix @ ak, s.dual_core_ep, s.drazin]
        _assert_equivalence(_relation_table(family, nullspace_equal))


def test_classification_contains_core_ep(solved_pool) -> None:
    for s in solved_pool:
        kinds = classify_inverse(s.a, s.core_ep, e=s.e)
        assert K.CORE_EP_E in kinds


def test_zero_candidate(solved_pool) -> None:
    for s in solved_pool[::2]:
        a = s.a
        if a.is_zero():
            continue
        kinds = classify_inverse(a, Matrix.zeros(a.rows, a.cols), e=s.e, f=s.f)
        if a.power(s.k).is_zero():
            assert kinds == NILPOTENT_KINDS
        else:
            assert kinds == set()


# Brute-force classification: each kind's defining equations written out
# directly, independent of the axiom catalog.
def _equations(
    a: Matrix, x: Matrix, e: Weight, f: Weight, core: Matrix, dual: Matrix
) -> dict[K, list]:
    k = index(a)
    ak = a.power(k)
    em, fm = e.matrix, f.matrix
    eax, fxa = em @ a @ x, fm @ x @ a
    plain = [(a @ x @ a, a), (x @ a @ x, x), ((a @ x).H, a @ x), ((x @ a).H, x @ a)]
    table: dict[K, list] = {
        K.MOORE_PENROSE: plain,
        K.DRAZIN: [(x @ ak @ a, ak), (x @ a @ x, x), (a @ x, x @ a)],
        K.GROUP: [(a @ x @ a, a), (x @ a @ x, x), (a @ x, x @ a)],
        K.ONE_THREE_E: [(a @ x @ a, a), (eax.H, eax)],
        K.ONE_FOUR_F: [(a @ x @ a, a), (fxa.H, fxa)],
        K.WEIGHTED_MP: [(a @ x @ a, a), (x @ a @ x, x), (eax.H, eax), (fxa.H, fxa)],
        K.WEIGHTED_CORE: [(x @ a @ a, a), (a @ x @ x, x), (eax.H, eax)],
        K.WEIGHTED_DUAL_CORE: [(a @ a @ x, a), (x @ x @ a, x), (fxa.H, fxa)],
        K.CORE_EP_E: [(x @ ak @ a, ak), (a @ x @ x, x), (eax.H, eax)],
        K.DUAL_CORE_EP_F: [(a @ ak @ x, ak), (x @ x @ a, x), (fxa.H, fxa)],
    }
    pinv_h = moore_penrose(a).H
    table[K.STAR_CORE_EP] = [
        (x @ pinv_h @ x, x),
        (x @ ak, a.H @ ak),
        (pinv_h @ x, a @ core),
    ]
    table[K.DUAL_CORE_EP_STAR] = [
        (x @ pinv_h @ x, x),
        (ak @ x, ak @ a.H),
        (x @ pinv_h, dual @ a),
    ]
    return table


def _oracle(
    a: Matrix, x: Matrix, e: Weight, f: Weight, core: Matrix, dual: Matrix
) -> set[K]:
    return {
        kind
        for kind, pairs in _equations(a, x, e, f, core, dual).items()
        if all(lhs == rhs for lhs, rhs in pairs)
    }


def _random_square(rng: np.random.Generator, n: int) -> Matrix:
    rows = rng.integers(-2, 3, size=(n, n))
    return Matrix.from_rows([[int(v) for v in row] for row in rows])


@pytest.mark.parametrize("n", [2, 3])
def test_classification_matches_direct_evaluation(n) -> None:
    rng = np.random.default_rng(100 + n)
    for _ in range(15):
        a = _random_square(rng, n)
        e = positive_definite_weight(rng, n, name="E")
        f = positive_definite_weight(rng, n, name="F")
        core = core_ep(a, e)
        dual = dual_core_ep(a, f)
        assert isinstance(core, InverseResult)
        assert isinstance(dual, InverseResult)
        candidates = [
            moore_penrose(a),
            drazin(a),
            core.value,
            dual.value,
            a.H @ a @ core.value,
            dual.value @ a @ a.H,
            Matrix.zeros(n, n),
            Matrix.identity(n),
            _random_square(rng, n),
        ]
        sharp = group_inverse(a)
        if isinstance(sharp, Matrix):
            candidates.append(sharp)
        for x in candidates:
            expected = _oracle(a, x, e, f, core.value, dual.value)
            assert classify_inverse(a, x, e=e, f=f) == expected
