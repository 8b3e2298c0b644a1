"""Tests for the generalized entropy family.

Brute-force oracles below evaluate the defining sums term by term with
plain ** powers, independently of the library's expm1-based path.
"""

import math

import numpy as np
import pytest

from entrokit import (
    DeformParams,
    ParamError,
    conditional_entropy,
    conditional_entropy3,
    entropy,
    entropy_literal,
    flatten,
    joint_entropy,
    make_distribution,
    make_joint2,
    mutual_entropy,
    product,
    reference_entropy,
    sample_distribution,
    sample_joint2,
    sample_joint3,
    shannon_entropy,
    tsallis_entropy,
)

PARAMS = DeformParams(0.3, 0.8)


def brute_lnkr(x, k, r):
    return (x**k - x**-k) / (2 * k * x**r)


def brute_entropy(pvec, k, r):
    total = 0.0
    for p in pvec:
        if p > 0:
            total -= p ** (r + k + 1) * brute_lnkr(p, k, r)
    return total


def brute_conditional(mat, k, r):
    total = 0.0
    for row in np.asarray(mat):
        px = row.sum()
        if px <= 0:
            continue
        inner = 0.0
        for c in row / px:
            if c > 0:
                inner -= c ** (r + k + 1) * brute_lnkr(c, k, r)
        total += px ** (2 * k + 1) * inner
    return total


class TestEntropy:
    def test_degenerate_is_zero(self):
        assert entropy(make_distribution([1.0, 0.0, 0.0]), PARAMS).value == 0.0

    def test_uniform_closed_form(self):
        # uniform(n): S = (1 - n^{-2k}) / (2k)
        d = make_distribution([0.25] * 4)
        assert entropy(d, DeformParams(0.25, 1.0)).value == pytest.approx(
            1.0, rel=1e-14
        )
        for n in (2, 3, 8, 16):
            for k in (0.1, 0.3, 0.5):
                val = entropy(
                    make_distribution([1.0 / n] * n), DeformParams(k, 1.0)
                ).value
                assert val == pytest.approx(
                    (1 - n ** (-2 * k)) / (2 * k), rel=1e-13
                )

    def test_half_half(self):
        assert entropy(
            make_distribution([0.5, 0.5]), DeformParams(0.5, 1.0)
        ).value == pytest.approx(0.5, rel=1e-14)

    def test_against_brute_force(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            d = sample_distribution(int(rng.integers(1, 17)), rng)
            k = float(rng.uniform(0.05, 0.5))
            r = float(rng.uniform(0.1, 2.0))
            val = entropy(d, DeformParams(k, r)).value
            assert val == pytest.approx(brute_entropy(d.p, k, r), rel=1e-11, abs=1e-13)

    def test_nonnegative(self):
        rng = np.random.default_rng(32)
        for _ in range(200):
            d = sample_distribution(int(rng.integers(1, 17)), rng)
            k = float(rng.uniform(0.01, 0.5))
            assert entropy(d, DeformParams(k, 1.0)).value >= 0.0

    def test_literal_matches_canonical(self):
        rng = np.random.default_rng(33)
        for _ in range(50):
            d = sample_distribution(int(rng.integers(1, 17)), rng)
            params = DeformParams(
                float(rng.uniform(0.05, 0.5)), float(rng.uniform(0.1, 2.0))
            )
            assert entropy_literal(d, params) == pytest.approx(
                entropy(d, params).value, rel=1e-12, abs=1e-14
            )

    def test_r_independence(self):
        d = make_distribution([0.2, 0.3, 0.5])
        k = 0.3
        vals = [entropy(d, DeformParams(k, r)).value for r in (0.1, 0.5, 1.0, 2.0)]
        assert max(vals) - min(vals) == 0.0
        lits = [entropy_literal(d, DeformParams(k, r)) for r in (0.1, 0.5, 1.0, 2.0)]
        assert max(lits) - min(lits) <= 1e-12 * (1 + abs(lits[0]))

    def test_float_protocol(self):
        assert float(entropy(make_distribution([1.0]), PARAMS)) == 0.0


class TestJointEntropy:
    def test_degenerate_product(self):
        j = product(make_distribution([1.0, 0.0]), make_distribution([1.0, 0.0]))
        assert joint_entropy(j, PARAMS).value == 0.0

    def test_uniform_2x2(self):
        j = make_joint2(np.full((2, 2), 0.25))
        assert joint_entropy(j, DeformParams(0.5, 1.0)).value == pytest.approx(
            0.75, rel=1e-14
        )

    def test_equals_flattened_entropy(self):
        rng = np.random.default_rng(41)
        for _ in range(20):
            j = sample_joint2(int(rng.integers(1, 9)), int(rng.integers(1, 9)), rng)
            assert joint_entropy(j, PARAMS).value == entropy(flatten(j), PARAMS).value

    def test_joint3(self):
        t = sample_joint3(3, 2, 4, seed=6)
        assert joint_entropy(t, PARAMS).value == entropy(flatten(t), PARAMS).value


class TestConditionalEntropy:
    def test_degenerate_target(self):
        j = product(make_distribution([0.5, 0.5]), make_distribution([1.0, 0.0]))
        assert conditional_entropy(j, PARAMS, "Y_given_X").value == 0.0

    def test_product_uniform(self):
        j = product(make_distribution([0.5, 0.5]), make_distribution([0.5, 0.5]))
        val = conditional_entropy(j, DeformParams(0.5, 1.0), "Y_given_X").value
        assert val == pytest.approx(0.25, rel=1e-14)

    def test_against_brute_force(self):
        rng = np.random.default_rng(51)
        for _ in range(30):
            j = sample_joint2(int(rng.integers(1, 9)), int(rng.integers(1, 9)), rng)
            k = float(rng.uniform(0.05, 0.5))
            r = float(rng.uniform(0.1, 2.0))
            val = conditional_entropy(j, DeformParams(k, r), "Y_given_X").value
            assert val == pytest.approx(brute_conditional(j.m, k, r), rel=1e-11, abs=1e-13)
            val_t = conditional_entropy(j, DeformParams(k, r), "X_given_Y").value
            assert val_t == pytest.approx(
                brute_conditional(j.m.T, k, r), rel=1e-11, abs=1e-13
            )

    def test_chain_rule(self):
        rng = np.random.default_rng(52)
        for _ in range(50):
            j = sample_joint2(int(rng.integers(1, 17)), int(rng.integers(1, 17)), rng)
            params = DeformParams(
                float(rng.uniform(0.05, 0.5)), float(rng.uniform(0.1, 2.0))
            )
            lhs = joint_entropy(j, params).value
            rhs = (
                entropy(j.marginal_x(), params).value
                + conditional_entropy(j, params, "Y_given_X").value
            )
            assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)

    def test_conditioning_reduces_entropy(self):
        rng = np.random.default_rng(53)
        for _ in range(100):
            j = sample_joint2(int(rng.integers(1, 9)), int(rng.integers(1, 9)), rng)
            params = DeformParams(float(rng.uniform(0.05, 0.5)), 1.0)
            sy = entropy(j.marginal_y(), params).value
            assert conditional_entropy(j, params, "Y_given_X").value <= sy + 1e-12

    def test_independence_rule(self):
        rng = np.random.default_rng(54)
        for _ in range(30):
            p = sample_distribution(int(rng.integers(1, 9)), rng)
            q = sample_distribution(int(rng.integers(1, 9)), rng)
            k = float(rng.uniform(0.05, 0.5))
            params = DeformParams(k, 1.0)
            sx, sy = entropy(p, params).value, entropy(q, params).value
            lhs = conditional_entropy(product(p, q), params, "Y_given_X").value
            assert lhs == pytest.approx(sy - 2 * k * sx * sy, rel=1e-12, abs=1e-12)

    def test_bad_direction(self):
        j = sample_joint2(2, 2, seed=1)
        with pytest.raises(ParamError):
            conditional_entropy(j, PARAMS, "Z_given_X")

    def test_iterated_chain_rule_four_variables(self):
        # S(X1..X4) = sum_i S(Xi | X_{i-1}..X1), built by flattening the
        # conditioning prefix into one variable at each step
        rng = np.random.default_rng(55)
        dims = (2, 3, 2, 3)
        cells = rng.exponential(size=dims)
        cells /= cells.sum()
        params = DeformParams(0.3, 1.2)
        total = entropy(make_distribution(cells.ravel()), params).value
        accumulated = 0.0
        for i in range(len(dims)):
            prefix = int(np.prod(dims[:i])) if i else 1
            rest = int(np.prod(dims[i + 1:])) if i + 1 < len(dims) else 1
            mat = cells.reshape(prefix, dims[i], rest).sum(axis=2)
            accumulated += conditional_entropy(
                make_joint2(mat), params, "Y_given_X"
            ).value
        assert total == pytest.approx(accumulated, rel=1e-12, abs=1e-12)


class TestConditionalEntropy3:
    def test_fully_degenerate(self):
        t = np.zeros((2, 2, 2))
        t[0, 0, 0] = 1.0
        from entrokit import make_joint3

        j = make_joint3(t)
        for mode in ("XY_given_Z", "Y_given_XZ", "X_given_Z", "Y_given_Z"):
            assert conditional_entropy3(j, PARAMS, mode).value == 0.0

    def test_corollary_closures(self):
        rng = np.random.default_rng(61)
        for _ in range(30):
            dims = tuple(int(rng.integers(1, 7)) for _ in range(3))
            t = sample_joint3(*dims, rng)
            params = DeformParams(
                float(rng.uniform(0.05, 0.5)), float(rng.uniform(0.1, 2.0))
            )
            sxyz = joint_entropy(t, params).value
            sz = entropy(t.marginal(2), params).value
            sxy_z = conditional_entropy3(t, params, "XY_given_Z").value
            assert sxyz == pytest.approx(sxy_z + sz, rel=1e-12, abs=1e-12)
            sx_z = conditional_entropy3(t, params, "X_given_Z").value
            sy_xz = conditional_entropy3(t, params, "Y_given_XZ").value
            assert sxy_z == pytest.approx(sx_z + sy_xz, rel=1e-12, abs=1e-12)

    def test_pair_conditionals_reduce_to_two_variable_form(self):
        t = sample_joint3(3, 4, 2, seed=62)
        # X|Z on the (x, z) pair joint with conditioning on the second axis
        pair_xz = t.pair(drop_axis=1)
        assert conditional_entropy3(t, PARAMS, "X_given_Z").value == pytest.approx(
            conditional_entropy(pair_xz, PARAMS, "X_given_Y").value, rel=1e-14
        )

    def test_bad_mode(self):
        t = sample_joint3(2, 2, 2, seed=1)
        with pytest.raises(ParamError):
            conditional_entropy3(t, PARAMS, "Z_given_XY")


class TestMutualEntropy:
    def test_product_value(self):
        j = product(make_distribution([0.5, 0.5]), make_distribution([0.5, 0.5]))
        assert mutual_entropy(j, DeformParams(0.5, 1.0)) == pytest.approx(
            0.25, rel=1e-13
        )

    def test_degenerate(self):
        j = product(make_distribution([1.0]), make_distribution([1.0]))
        assert mutual_entropy(j, PARAMS) == 0.0

    def test_diagonal_joint(self):
        j = make_joint2([[0.5, 0.0], [0.0, 0.5]])
        assert mutual_entropy(j, DeformParams(0.5, 1.0)) == pytest.approx(
            0.5, rel=1e-14
        )

    def test_equals_entropy_drop(self):
        rng = np.random.default_rng(71)
        for _ in range(30):
            j = sample_joint2(int(rng.integers(1, 9)), int(rng.integers(1, 9)), rng)
            params = DeformParams(float(rng.uniform(0.05, 0.5)), 1.0)
            lhs = mutual_entropy(j, params)
            rhs = (
                entropy(j.marginal_y(), params).value
                - conditional_entropy(j, params, "Y_given_X").value
            )
            assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


class TestAdditivityRules:
    def test_pseudo_additivity_on_products(self):
        rng = np.random.default_rng(81)
        for _ in range(50):
            p = sample_distribution(int(rng.integers(1, 9)), rng)
            q = sample_distribution(int(rng.integers(1, 9)), rng)
            k = float(rng.uniform(0.05, 0.5))
            params = DeformParams(k, 1.0)
            sx, sy = entropy(p, params).value, entropy(q, params).value
            sxy = joint_entropy(product(p, q), params).value
            assert sxy == pytest.approx(sx + sy - 2 * k * sx * sy, rel=1e-12, abs=1e-12)

    def test_subadditivity(self):
        rng = np.random.default_rng(82)
        for _ in range(100):
            j = sample_joint2(int(rng.integers(1, 9)), int(rng.integers(1, 9)), rng)
            params = DeformParams(float(rng.uniform(0.05, 0.5)), 1.0)
            sx = entropy(j.marginal_x(), params).value
            sy = entropy(j.marginal_y(), params).value
            assert joint_entropy(j, params).value <= sx + sy + 1e-12

    def test_joint_dominates_marginal(self):
        rng = np.random.default_rng(84)
        for _ in range(100):
            j = sample_joint2(int(rng.integers(1, 9)), int(rng.integers(1, 9)), rng)
            params = DeformParams(float(rng.uniform(0.05, 0.5)), 1.0)
            sx = entropy(j.marginal_x(), params).value
            assert joint_entropy(j, params).value >= sx - 1e-12

    def test_strong_subadditivity(self):
        rng = np.random.default_rng(83)
        for _ in range(60):
            dims = tuple(int(rng.integers(1, 6)) for _ in range(3))
            t = sample_joint3(*dims, rng)
            params = DeformParams(float(rng.uniform(0.05, 0.5)), 1.0)
            sxz = joint_entropy(t.pair(1), params).value
            syz = joint_entropy(t.pair(0), params).value
            sxyz = joint_entropy(t, params).value
            sz = entropy(t.marginal(2), params).value
            assert sxyz + sz <= sxz + syz + 1e-12


class TestReferenceEntropies:
    def test_shannon_uniform(self):
        assert shannon_entropy(make_distribution([0.5, 0.5])) == pytest.approx(
            math.log(2), rel=1e-14
        )

    def test_tsallis_uniform(self):
        assert tsallis_entropy(make_distribution([0.5, 0.5]), 2.0) == pytest.approx(
            0.5, rel=1e-14
        )

    def test_tsallis_reduction(self):
        rng = np.random.default_rng(91)
        for q in (1.2, 1.5, 2.0):
            params = DeformParams((q - 1) / 2, (q - 1) / 2)
            for _ in range(20):
                d = sample_distribution(int(rng.integers(1, 17)), rng)
                assert entropy(d, params).value == pytest.approx(
                    tsallis_entropy(d, q), rel=1e-12, abs=1e-13
                )

    def test_shannon_limit(self):
        rng = np.random.default_rng(92)
        params = DeformParams(1e-4, 1e-4)
        for _ in range(50):
            d = sample_distribution(int(rng.integers(2, 17)), rng)
            ref = shannon_entropy(d)
            assert abs(entropy(d, params).value - ref) <= 1e-3 * (1 + ref)

    def test_dispatch(self):
        d = make_distribution([0.5, 0.5])
        assert reference_entropy(d, "shannon") == shannon_entropy(d)
        assert reference_entropy(d, "tsallis", q=2.0) == tsallis_entropy(d, 2.0)
        with pytest.raises(ParamError):
            reference_entropy(d, "tsallis")
        with pytest.raises(ParamError):
            reference_entropy(d, "renyi")
        with pytest.raises(ParamError):
            tsallis_entropy(d, 1.0)
