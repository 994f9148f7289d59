import numpy as np
import pytest
from numpy.lib.stride_tricks import sliding_window_view

from tests.fixtures.series import noisy_series, ramp_series, series_factory
from tests.fixtures.series.series_fixtures import SeriesFactory
from tests.fixtures.synth import reference_series
from trendcast.trend import MovingAverage
from trendcast.types import IndexRange, MeanKind, TimeSeries
from trendcast.types.series_exceptions import InsufficientHistoryException, InvalidWindowException


@pytest.mark.describe("🧪  MovingAverage.causal_mean")
class TestCausalMean:
    @pytest.mark.it("✅  Should average the trailing window")
    def test_small_window(self, series_factory: SeriesFactory) -> None:
        trend = MovingAverage.causal_mean(series_factory([1, 2, 3, 4, 5]), 3)

        assert trend.valid_range == IndexRange(2, 4)
        np.testing.assert_allclose(trend.values, [2.0, 3.0, 4.0], rtol=1e-12)

    @pytest.mark.it("✅  Should return the input unchanged for n = 1")
    def test_unit_window(self, noisy_series: TimeSeries) -> None:
        assert MovingAverage.causal_mean(noisy_series, 1) == noisy_series

    @pytest.mark.it("✅  Should be exact on a constant series")
    def test_constant(self, series_factory: SeriesFactory) -> None:
        trend = MovingAverage.causal_mean(series_factory(np.full(300, 0.1)), 100)

        assert np.all(trend.values == 0.1)

    @pytest.mark.it("✅  Should lag a ramp by (n - 1) / 2 samples")
    def test_ramp_lag(self, ramp_series: TimeSeries) -> None:
        trend = MovingAverage.causal_mean(ramp_series, 100)

        expected = ramp_series.take(trend.valid_range.indices()) - 2.0 * 49.5
        np.testing.assert_allclose(trend.values, expected, rtol=1e-12)

    @pytest.mark.it("✅  Should match a direct window average across re-summing blocks")
    def test_matches_direct_average(self, noisy_series: TimeSeries) -> None:
        values = noisy_series.values
        fast = MovingAverage.rolling_mean(values, 100, resum_interval=512)
        direct = np.array([values[k : k + 100].mean() for k in range(values.size - 99)])

        np.testing.assert_allclose(fast, direct, rtol=1e-12)

    @pytest.mark.it("✅  Should match naive re-summation over 30 days of minute data")
    def test_drift_guard_month(self, reference_series: TimeSeries) -> None:
        values = reference_series.values

        fast = MovingAverage.rolling_mean(values, 100)

        assert values.size == 43200
        naive = sliding_window_view(values, 100).mean(axis=1)
        np.testing.assert_allclose(fast, naive, rtol=1e-9)

    @pytest.mark.it("✅  Should be linear in its input")
    def test_linearity(self, noisy_series: TimeSeries) -> None:
        x = noisy_series.values[:300]
        y = 10.0 + np.cos(np.arange(300) / 9.0)

        combined = MovingAverage.rolling_mean(2.5 * x + 1.5 * y, 100)

        expected = 2.5 * MovingAverage.rolling_mean(x, 100) + 1.5 * MovingAverage.rolling_mean(y, 100)
        np.testing.assert_allclose(combined, expected, rtol=1e-12)

    @pytest.mark.it("✅  Should commute with a time shift")
    def test_shift_equivariance(
        self, noisy_series: TimeSeries, series_factory: SeriesFactory
    ) -> None:
        later = series_factory(noisy_series.values[7:])

        whole = MovingAverage.causal_mean(noisy_series, 100)
        shifted = MovingAverage.causal_mean(later, 100)

        np.testing.assert_allclose(shifted.values, whole.values[7:], rtol=1e-12)

    @pytest.mark.it("✅  Should propagate the offset of a derived series")
    def test_derived_offset(self, series_factory: SeriesFactory) -> None:
        trend = MovingAverage.causal_mean(series_factory(np.arange(10.0), offset=5), 4)

        assert trend.offset == 8

    @pytest.mark.it("❌  Should fail on a window shorter than one sample")
    def test_zero_window(self, ramp_series: TimeSeries) -> None:
        with pytest.raises(InvalidWindowException):
            MovingAverage.causal_mean(ramp_series, 0)

    @pytest.mark.it("❌  Should fail on a series shorter than the window")
    def test_too_short(self, series_factory: SeriesFactory) -> None:
        with pytest.raises(InsufficientHistoryException):
            MovingAverage.causal_mean(series_factory([1.0, 2.0]), 3)


@pytest.mark.describe("🧪  MovingAverage.centered_mean")
class TestCenteredMean:
    @pytest.mark.it("✅  Should lean one sample toward the future")
    def test_span(self, series_factory: SeriesFactory) -> None:
        trend = MovingAverage.centered_mean(series_factory([1, 2, 3, 4, 5, 6]), 4)

        # index 1 averages samples 0..3
        assert trend.valid_range == IndexRange(1, 3)
        np.testing.assert_allclose(trend.values, [2.5, 3.5, 4.5], rtol=1e-12)

    @pytest.mark.it("✅  Should reproduce a ramp with a half-sample lead")
    def test_ramp(self, ramp_series: TimeSeries) -> None:
        trend = MovingAverage.centered_mean(ramp_series, 100)

        assert trend.valid_range == IndexRange(49, 449)
        expected = ramp_series.take(trend.valid_range.indices()) + 2.0 * 0.5
        np.testing.assert_allclose(trend.values, expected, rtol=1e-12)

    @pytest.mark.it("✅  Should dispatch on the mean kind")
    def test_mean_dispatch(self, ramp_series: TimeSeries) -> None:
        assert MovingAverage.mean(ramp_series, 10, MeanKind.CENTERED).offset == 4
        assert MovingAverage.mean(ramp_series, 10, MeanKind.CAUSAL).offset == 9

    @pytest.mark.it("❌  Should fail on an odd window")
    @pytest.mark.parametrize("n", [1, 99])
    def test_odd(self, ramp_series: TimeSeries, n: int) -> None:
        with pytest.raises(InvalidWindowException):
            MovingAverage.centered_mean(ramp_series, n)
