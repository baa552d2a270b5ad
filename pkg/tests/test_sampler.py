"""Sampling tests: stream reproducibility, convolution routing, and the
cosine / standardized transforms."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from longmem.errors import DegenerateSampleError
from longmem.sampler import RngStream, draw_epsilon, generate, standardize
from longmem.spectral import build_model

BETA_GRID = [0.0, 0.5, 1.0, 2.2, 3.0, 7.0, 10.0]


class TestRngStream:
    def test_same_address_same_draws(self):
        a = draw_epsilon(RngStream(seed=5, stream_index=0), 201)
        b = draw_epsilon(RngStream(seed=5, stream_index=0), 201)
        np.testing.assert_array_equal(a, b)

    def test_streams_are_distinct(self):
        a = draw_epsilon(RngStream(seed=5, stream_index=0), 201)
        b = draw_epsilon(RngStream(seed=5, stream_index=1), 201)
        assert np.abs(a - b).max() > 0.1

    def test_seeds_are_distinct(self):
        a = draw_epsilon(RngStream(seed=5), 201)
        b = draw_epsilon(RngStream(seed=6), 201)
        assert np.abs(a - b).max() > 0.1

    def test_stateless_across_call_order(self):
        stream = RngStream(seed=11, stream_index=3)
        first = draw_epsilon(stream, 41)
        draw_epsilon(RngStream(seed=11, stream_index=4), 41)
        np.testing.assert_array_equal(draw_epsilon(stream, 41), first)

    def test_standard_normal_moments(self):
        pooled = np.concatenate(
            [draw_epsilon(RngStream(seed=5, stream_index=i), 200_001) for i in range(5)]
        )
        assert pooled.size > 1_000_000
        assert abs(pooled.mean()) < 0.005
        assert 0.99 < pooled.var() < 1.01

    def test_address_validation(self):
        with pytest.raises(ValueError):
            RngStream(seed=-1)
        with pytest.raises(ValueError):
            RngStream(seed=2**64)
        with pytest.raises(ValueError):
            RngStream(seed=5, stream_index=-1)

    @pytest.mark.parametrize("rn", [4, 2, 1, 0, -3])
    def test_rn_validation(self, rn):
        with pytest.raises(ValueError):
            draw_epsilon(RngStream(seed=5), rn)


class TestGenerate:
    def test_deterministic(self):
        model = build_model(2.2, 40)
        a = generate(model, RngStream(seed=5, stream_index=2))
        b = generate(model, RngStream(seed=5, stream_index=2))
        np.testing.assert_array_equal(a.epsilon, b.epsilon)
        np.testing.assert_array_equal(a.series, b.series)
        np.testing.assert_array_equal(a.standardized, b.standardized)

    def test_epsilon_matches_direct_draw(self):
        model = build_model(2.2, 40)
        sample = generate(model, RngStream(seed=7, stream_index=9))
        np.testing.assert_array_equal(
            sample.epsilon, draw_epsilon(RngStream(seed=7, stream_index=9), model.rn)
        )
        assert sample.seed == 7
        assert sample.stream_index == 9

    def test_beta0_series_is_the_noise(self):
        # identity operator: convolution returns epsilon up to rounding
        model = build_model(0.0, 200)
        sample = generate(model, RngStream(seed=5))
        assert np.abs(sample.series - sample.epsilon).max() <= 1e-12 * np.abs(
            sample.epsilon
        ).max()

    def test_dense_route_matches_fast(self):
        model = build_model(2.2, 51)
        fast = generate(model, RngStream(seed=5))
        dense = generate(model, RngStream(seed=5), dense=True)
        np.testing.assert_array_equal(fast.epsilon, dense.epsilon)
        assert np.abs(fast.series - dense.series).max() <= 1e-9 * np.abs(
            dense.series
        ).max()

    @pytest.mark.parametrize("beta", BETA_GRID)
    def test_cosine_bounded(self, beta):
        model = build_model(beta, 200)
        for i in range(5):
            sample = generate(model, RngStream(seed=5, stream_index=i))
            assert np.abs(sample.cosvec).max() <= 1.0 + 1e-12

    def test_cosine_is_normalized_series(self):
        model = build_model(3.0, 40)
        sample = generate(model, RngStream(seed=5))
        norms = np.linalg.norm(model.first_row) * np.linalg.norm(sample.epsilon)
        np.testing.assert_allclose(sample.cosvec * norms, sample.series, rtol=1e-12)

    def test_standardized_endpoints_exact(self):
        model = build_model(2.2, 200)
        for i in range(5):
            sample = generate(model, RngStream(seed=5, stream_index=i))
            assert sample.standardized.min() == 0.0
            assert sample.standardized.max() == 1.0
            assert np.count_nonzero(sample.standardized == 0.0) >= 1
            assert np.count_nonzero(sample.standardized == 1.0) >= 1

    def test_beta10_single_frequency_dominates(self):
        # near-sinusoidal regime: the leading conjugate pair of spectral
        # bins carries most of the non-constant power
        model = build_model(10.0, 200)
        for i in range(50):
            sample = generate(model, RngStream(seed=5, stream_index=i))
            spectrum = np.fft.rfft(sample.series)
            power = np.abs(spectrum[1:]) ** 2
            assert power.max() / power.sum() > 0.5


class TestStandardize:
    def test_affine_map_endpoints(self):
        out = standardize(np.array([2.0, 4.0, 3.0]))
        np.testing.assert_array_equal(out, [0.0, 1.0, 0.5])

    def test_accepts_sample(self):
        model = build_model(2.2, 40)
        sample = generate(model, RngStream(seed=5))
        np.testing.assert_array_equal(standardize(sample), sample.standardized)

    @given(
        st.lists(
            st.floats(min_value=-50, max_value=50, allow_nan=False),
            min_size=2,
            max_size=40,
        ),
        st.floats(min_value=0.1, max_value=10.0),
        st.floats(min_value=-100.0, max_value=100.0),
    )
    @settings(max_examples=80)
    def test_location_scale_invariant(self, xs, scale, shift):
        x = np.array(xs)
        if x.max() - x.min() < 1.0:
            return
        base = standardize(x)
        moved = standardize(scale * x + shift)
        assert np.abs(moved - base).max() <= 1e-12

    def test_constant_rejected(self):
        with pytest.raises(DegenerateSampleError):
            standardize(np.full(10, 3.3))

    def test_shape_and_finiteness_validated(self):
        with pytest.raises(ValueError):
            standardize(np.ones((3, 3)))
        with pytest.raises(ValueError):
            standardize(np.array([]))
        with pytest.raises(ValueError):
            standardize(np.array([1.0, np.nan]))
