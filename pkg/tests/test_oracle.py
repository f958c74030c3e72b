"""Iterative capacity solvers and their certified bounds."""

import math

import numpy as np
import pytest

from chancap import (
    LogConfig,
    OracleConfig,
    binary_capacity,
    binary_channel,
    blahut_arimoto,
    capacity_bounds,
    grid_search_binary,
)


class TestOracleConfig:
    def test_defaults(self):
        ocfg = OracleConfig()
        assert ocfg.tolerance == 1e-9
        assert ocfg.max_iterations == 100000
        assert ocfg.grid_resolution == 10**6

    def test_validation(self):
        with pytest.raises(ValueError):
            OracleConfig(tolerance=0.0)
        with pytest.raises(ValueError):
            OracleConfig(max_iterations=0)
        with pytest.raises(ValueError):
            OracleConfig(grid_resolution=1)


class TestBlahutArimoto:
    def test_identity_four(self):
        res = blahut_arimoto(np.eye(4))
        assert res.converged
        assert res.capacity == pytest.approx(2.0, abs=1e-9)
        np.testing.assert_allclose(res.input_dist, 0.25, atol=1e-9)

    def test_z_channel(self):
        res = blahut_arimoto(binary_channel(0.0, 0.5))
        assert res.converged
        assert res.capacity == pytest.approx(math.log2(1.25), abs=1e-9)
        np.testing.assert_allclose(res.input_dist, [0.6, 0.4], atol=1e-6)

    def test_degenerate_capacity_is_zero(self):
        res = blahut_arimoto(binary_channel(0.3, 0.3))
        assert res.converged
        assert abs(res.capacity) <= 1e-9

    def test_non_square_channel(self):
        q = np.array([[0.5, 0.25, 0.25], [0.25, 0.25, 0.5]])
        res = blahut_arimoto(q)
        assert res.converged
        lower, upper = capacity_bounds(res.input_dist, q)
        assert res.capacity == pytest.approx(lower, abs=1e-8)

    def test_singular_square_equals_deduplicated_channel(self):
        """A duplicated input row adds nothing to the capacity."""
        base_rows = np.array([[0.7, 0.2, 0.1], [0.1, 0.3, 0.6]])
        dup = np.vstack([base_rows, base_rows[0]])
        assert blahut_arimoto(dup).capacity == pytest.approx(
            blahut_arimoto(base_rows).capacity, abs=1e-8
        )

    def test_monotone_lower_bound(self):
        """The reported capacity never decreases with more iterations."""
        for q in (
            binary_channel(0.0, 0.5),
            binary_channel(0.37, 0.41),
            np.array([[0.8, 0.1, 0.1], [0.5, 0.25, 0.25], [0.1, 0.1, 0.8]]),
        ):
            caps = [
                blahut_arimoto(q, oracle=OracleConfig(max_iterations=k)).capacity
                for k in range(1, 30)
            ]
            for earlier, later in zip(caps, caps[1:]):
                assert later >= earlier - 1e-12

    def test_iteration_limit_reported(self):
        res = blahut_arimoto(binary_channel(0.0, 0.5), oracle=OracleConfig(max_iterations=3))
        assert not res.converged
        assert res.iterations == 3
        assert res.capacity <= math.log2(1.25) + 1e-12

    def test_converged_gap_is_certified(self):
        q = binary_channel(0.15, 0.6)
        res = blahut_arimoto(q, oracle=OracleConfig(tolerance=1e-11))
        lower, upper = capacity_bounds(res.input_dist, q)
        assert upper - res.capacity <= 1e-10

    def test_scalar_and_general_paths_agree(self):
        """Appending an all-zero output column routes the same channel
        through the general-shape code path; results must match."""
        rng = np.random.default_rng(61)
        for _ in range(20):
            a, c = rng.random(2)
            if abs(c - a) <= 1e-3:
                continue
            q22 = binary_channel(a, c)
            q23 = np.hstack([q22, np.zeros((2, 1))])
            r22 = blahut_arimoto(q22)
            r23 = blahut_arimoto(q23)
            assert r22.capacity == pytest.approx(r23.capacity, abs=1e-12)
            assert r22.iterations == r23.iterations

    def test_base_conversion(self):
        bits = blahut_arimoto(binary_channel(0.1, 0.7)).capacity
        nats = blahut_arimoto(
            binary_channel(0.1, 0.7), LogConfig(base=math.e), OracleConfig(tolerance=1e-12)
        ).capacity
        assert nats == pytest.approx(bits * math.log(2.0), abs=1e-8)


class TestGridSearch:
    def test_noiseless(self):
        res = grid_search_binary(binary_channel(0.0, 1.0))
        assert res.capacity == pytest.approx(1.0, abs=1e-9)
        assert res.p1 == pytest.approx(0.5, abs=1e-5)

    def test_z_channel(self):
        res = grid_search_binary(binary_channel(0.0, 0.5))
        assert res.capacity == pytest.approx(math.log2(1.25), abs=1e-9)
        assert res.p1 == pytest.approx(0.6, abs=1e-5)

    def test_symmetric_channel(self):
        res = grid_search_binary(binary_channel(0.1, 0.9))
        h2 = -(0.1 * math.log2(0.1) + 0.9 * math.log2(0.9))
        assert res.capacity == pytest.approx(1.0 - h2, abs=1e-9)
        assert res.p1 == pytest.approx(0.5, abs=1e-5)

    def test_two_by_three(self):
        q = np.array([[0.8, 0.1, 0.1], [0.1, 0.1, 0.8]])
        res = grid_search_binary(q)
        ba = blahut_arimoto(q)
        assert res.capacity == pytest.approx(ba.capacity, abs=1e-6)

    def test_requires_two_rows(self):
        with pytest.raises(ValueError):
            grid_search_binary(np.eye(3))

    def test_coarse_resolution(self):
        res = grid_search_binary(
            binary_channel(0.0, 0.5), oracle=OracleConfig(grid_resolution=11)
        )
        assert res.p1 == pytest.approx(0.6, abs=1e-12)

    def test_cross_agreement_with_iterative_solver(self):
        rng = np.random.default_rng(62)
        for _ in range(20):
            a, c = rng.random(2)
            if abs(c - a) <= 1e-3:
                continue
            g = grid_search_binary(binary_channel(a, c))
            b = blahut_arimoto(binary_channel(a, c))
            assert g.capacity == pytest.approx(b.capacity, abs=1e-6)


class TestCapacityBounds:
    def test_bracket_contains_capacity(self):
        q = binary_channel(0.2, 0.65)
        cap = binary_capacity(0.2, 0.65)
        rng = np.random.default_rng(63)
        for _ in range(50):
            p = rng.dirichlet(np.ones(2))
            lower, upper = capacity_bounds(p, q)
            assert lower <= cap + 1e-12
            assert upper >= cap - 1e-12

    def test_tight_at_optimum(self):
        lower, upper = capacity_bounds([0.6, 0.4], binary_channel(0.0, 0.5))
        assert upper - lower <= 1e-12
        assert lower == pytest.approx(math.log2(1.25), abs=1e-12)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            capacity_bounds([1.0], binary_channel(0.0, 0.5))
