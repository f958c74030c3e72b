"""Closed-form binary channel: worked values, symmetries, feasibility bound."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chancap import (
    DegenerateChannelError,
    LogConfig,
    binary_aux,
    binary_capacity,
    binary_channel,
    binary_optimal_input,
    binary_optimal_output,
    channel_mutual_information,
    muroga_capacity,
    output_distribution,
)

H2_01 = -(0.1 * math.log2(0.1) + 0.9 * math.log2(0.9))


class TestBinaryAux:
    def test_noiseless(self):
        assert binary_aux(0.0, 1.0) == (0.0, 0.0)

    def test_z_channel(self):
        assert binary_aux(0.0, 0.5) == (0.0, -2.0)

    def test_symmetric_channel(self):
        x1, x2 = binary_aux(0.1, 0.9)
        assert x1 == pytest.approx(-H2_01, abs=1e-14)
        assert x2 == pytest.approx(-H2_01, abs=1e-14)

    def test_degenerate_raises(self):
        with pytest.raises(DegenerateChannelError):
            binary_aux(0.3, 0.3)
        with pytest.raises(DegenerateChannelError):
            binary_aux(0.3, 0.3 + 5e-13)

    def test_parameters_outside_unit_interval(self):
        with pytest.raises(ValueError):
            binary_aux(-0.2, 0.5)
        with pytest.raises(ValueError):
            binary_aux(0.2, 1.2)


class TestBinaryCapacity:
    def test_degenerate_line_is_exactly_zero(self):
        for a in np.linspace(0.0, 1.0, 11):
            assert binary_capacity(float(a), float(a)) == 0.0

    def test_noiseless_is_one_bit(self):
        assert binary_capacity(0.0, 1.0) == 1.0
        assert binary_capacity(1.0, 0.0) == 1.0

    def test_z_channel(self):
        assert binary_capacity(0.0, 0.5) == pytest.approx(math.log2(1.25), abs=1e-12)

    def test_symmetric_channel(self):
        assert binary_capacity(0.1, 0.9) == pytest.approx(1.0 - H2_01, abs=1e-12)

    def test_row_swap_symmetry(self):
        rng = np.random.default_rng(51)
        for _ in range(300):
            a, c = rng.random(2)
            assert binary_capacity(a, c) == pytest.approx(binary_capacity(c, a), abs=1e-12)

    def test_column_swap_symmetry(self):
        rng = np.random.default_rng(52)
        for _ in range(300):
            a, c = rng.random(2)
            assert binary_capacity(a, c) == pytest.approx(
                binary_capacity(1.0 - a, 1.0 - c), abs=1e-12
            )

    def test_range_on_grid(self):
        """0 <= C <= 1 bit everywhere on the closed parameter square."""
        for a in np.linspace(0.0, 1.0, 201):
            for c in np.linspace(0.0, 1.0, 201):
                cap = binary_capacity(float(a), float(c))
                assert 0.0 <= cap <= 1.0 + 1e-12

    def test_agrees_with_square_solver(self):
        rng = np.random.default_rng(53)
        checked = 0
        while checked < 10000:
            a, c = rng.random(2)
            if abs(c - a) <= 1e-3:
                continue
            sol = muroga_capacity(binary_channel(a, c))
            assert abs(binary_capacity(a, c) - sol.capacity) <= 1e-10
            checked += 1

    def test_base_conversion(self):
        bits = binary_capacity(0.0, 0.5)
        nats = binary_capacity(0.0, 0.5, LogConfig(base=math.e))
        assert nats == pytest.approx(bits * math.log(2.0), abs=1e-14)

    @settings(max_examples=300, deadline=None)
    @given(
        st.floats(min_value=0.0, max_value=1.0),
        st.floats(min_value=0.0, max_value=1.0),
    )
    def test_total_on_unit_square(self, a, c):
        cap = binary_capacity(a, c)
        assert 0.0 <= cap <= 1.0 + 1e-12


class TestBinaryOptimalInput:
    def test_noiseless(self):
        np.testing.assert_allclose(binary_optimal_input(0.0, 1.0), [0.5, 0.5], atol=1e-15)

    def test_z_channel(self):
        np.testing.assert_allclose(binary_optimal_input(0.0, 0.5), [0.6, 0.4], atol=1e-14)

    def test_symmetric_channel(self):
        np.testing.assert_allclose(binary_optimal_input(0.1, 0.9), [0.5, 0.5], atol=1e-12)

    def test_sums_to_one(self):
        rng = np.random.default_rng(54)
        for _ in range(1000):
            a, c = rng.random(2)
            if abs(c - a) <= 1e-6:
                continue
            p = binary_optimal_input(a, c)
            assert abs(math.fsum(p) - 1.0) <= 1e-12

    def test_interior_feasibility_bound(self):
        """For 0 < a < c < 1 both weights stay inside [1/e, 1 - 1/e]."""
        rng = np.random.default_rng(55)
        lo = 1.0 / math.e - 1e-9
        hi = 1.0 - 1.0 / math.e + 1e-9
        for _ in range(2000):
            a, c = np.sort(rng.random(2))
            if not 0.0 < a < c < 1.0:
                continue
            p = binary_optimal_input(float(a), float(c))
            assert lo <= p[0] <= hi
            assert lo <= p[1] <= hi

    def test_boundary_weights_nonnegative(self):
        for a, c in [(0.0, 0.5), (0.0, 1.0), (0.5, 1.0), (0.0, 0.001), (0.999, 1.0)]:
            p = binary_optimal_input(a, c)
            assert p.min() >= -1e-12

    def test_degenerate_raises(self):
        with pytest.raises(DegenerateChannelError):
            binary_optimal_input(0.4, 0.4)


class TestBinaryOptimalOutput:
    def test_z_channel(self):
        np.testing.assert_allclose(binary_optimal_output(0.0, 0.5), [0.8, 0.2], atol=1e-14)

    def test_symmetric_channel(self):
        np.testing.assert_allclose(binary_optimal_output(0.1, 0.9), [0.5, 0.5], atol=1e-12)

    def test_positive_and_normalized(self):
        rng = np.random.default_rng(56)
        for _ in range(1000):
            a, c = rng.random(2)
            if abs(c - a) <= 1e-6:
                continue
            r = binary_optimal_output(a, c)
            assert np.all(r > 0)
            assert abs(math.fsum(r) - 1.0) <= 1e-12

    def test_consistent_with_optimal_input(self):
        """r equals p pushed through the channel."""
        rng = np.random.default_rng(57)
        for _ in range(500):
            a, c = rng.random(2)
            if abs(c - a) <= 1e-3:
                continue
            p = binary_optimal_input(a, c)
            r = binary_optimal_output(a, c)
            np.testing.assert_allclose(
                r, output_distribution(np.clip(p, 0.0, 1.0), binary_channel(a, c)), atol=1e-10
            )

    def test_degenerate_raises(self):
        with pytest.raises(DegenerateChannelError):
            binary_optimal_output(0.2, 0.2)


class TestConsistency:
    def test_capacity_is_mutual_information_at_optimum(self):
        rng = np.random.default_rng(58)
        for _ in range(500):
            a, c = rng.random(2)
            if abs(c - a) <= 1e-3:
                continue
            p = np.clip(binary_optimal_input(a, c), 0.0, 1.0)
            i = channel_mutual_information(p / p.sum(), binary_channel(a, c))
            assert binary_capacity(a, c) == pytest.approx(i, abs=1e-10)

    def test_capacity_is_maximal_over_sweep(self):
        """No swept input beats the closed-form capacity."""
        sweep = np.linspace(0.0, 1.0, 1001)
        for a, c in [(0.0, 0.5), (0.1, 0.9), (0.2, 0.25), (0.7, 0.1)]:
            cap = binary_capacity(a, c)
            q = binary_channel(a, c)
            for p1 in sweep:
                i = channel_mutual_information([float(p1), float(1.0 - p1)], q)
                assert cap >= i - 1e-9
