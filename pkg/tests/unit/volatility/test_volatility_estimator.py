import numpy as np
import pytest
from numpy.lib.stride_tricks import sliding_window_view

from tests.fixtures.series import noisy_series, series_factory
from tests.fixtures.series.series_fixtures import SeriesFactory
from tests.fixtures.synth import reference_series
from trendcast.trend import MovingAverage
from trendcast.types import Horizon, MeanKind, TimeSeries
from trendcast.types.series_exceptions import (
    AcausalInputException,
    InsufficientHistoryException,
    InvalidWindowException,
)
from trendcast.types.volatility_series import VolatilitySeries
from trendcast.volatility import VolatilityEstimator


@pytest.mark.describe("🧪  VolatilityEstimator.rolling_volatility")
class TestRollingVolatility:
    @pytest.mark.it("✅  Should be 1 on an alternating ±1 signal")
    def test_alternating(self, series_factory: SeriesFactory) -> None:
        series = series_factory(np.tile([1.0, -1.0], 50))

        vol = VolatilityEstimator.rolling_volatility(series, 2)

        assert np.array_equal(vol.values.values, np.ones(99))

    @pytest.mark.it("✅  Should be exactly 0 on a constant signal")
    @pytest.mark.parametrize("mean_kind", list(MeanKind))
    def test_constant(self, series_factory: SeriesFactory, mean_kind: MeanKind) -> None:
        series = series_factory(np.full(300, 17.3))

        vol = VolatilityEstimator.rolling_volatility(series, 100, mean_kind)

        assert not vol.values.values.any()

    @pytest.mark.it("✅  Should place the causal value at the window end")
    def test_causal_alignment(self, noisy_series: TimeSeries) -> None:
        vol = VolatilityEstimator.rolling_volatility(noisy_series, 100)

        assert vol.values.offset == 99
        assert vol.values.end_index == noisy_series.end_index
        assert vol.window == 100
        assert vol.mean_kind is MeanKind.CAUSAL

    @pytest.mark.it("✅  Should share the centered mean's index convention")
    def test_centered_alignment(self, noisy_series: TimeSeries) -> None:
        vol = VolatilityEstimator.rolling_volatility(noisy_series, 100, MeanKind.CENTERED)
        trend = MovingAverage.centered_mean(noisy_series, 100)

        assert vol.values.valid_range == trend.valid_range

    @pytest.mark.it("✅  Should match the two-pass population standard deviation")
    def test_two_pass_oracle(self, noisy_series: TimeSeries) -> None:
        vol = VolatilityEstimator.rolling_volatility(noisy_series, 250)

        expected = sliding_window_view(noisy_series.values, 250).std(axis=1)
        np.testing.assert_allclose(vol.values.values, expected, rtol=1e-10)

    @pytest.mark.it("✅  Should not depend on the chunk size")
    def test_chunking(self, noisy_series: TimeSeries) -> None:
        whole = VolatilityEstimator.window_std(noisy_series.values, 100, chunk=10**6)
        chunked = VolatilityEstimator.window_std(noisy_series.values, 100, chunk=7)

        np.testing.assert_array_equal(chunked, whole)

    @pytest.mark.it("✅  Should scale with |c| and ignore shifts")
    def test_scale_and_shift(self, reference_series: TimeSeries) -> None:
        vol = VolatilityEstimator.rolling_volatility(reference_series, 100).values.values
        scaled = VolatilityEstimator.rolling_volatility(
            reference_series.with_values(-3.0 * reference_series.values), 100
        )
        shifted = VolatilityEstimator.rolling_volatility(reference_series.scaled(1.0, 50.0), 100)

        np.testing.assert_allclose(scaled.values.values, 3.0 * vol, rtol=1e-12, atol=1e-12)
        np.testing.assert_allclose(shifted.values.values, vol, rtol=1e-12, atol=1e-12)

    @pytest.mark.it("✅  Should smooth the trend and raise volatility as the scale grows")
    def test_scale_monotonicity(self, reference_series: TimeSeries) -> None:
        windows = (100, 250, 500)
        scales = VolatilityEstimator.volatility_scales(reference_series, windows, threads=3)
        trend_variance = [
            MovingAverage.centered_mean(reference_series, n).values.var() for n in windows
        ]
        mean_volatility = [scales[n].values.values.mean() for n in windows]

        assert trend_variance[0] > trend_variance[1] > trend_variance[2]
        assert mean_volatility[0] <= mean_volatility[1] <= mean_volatility[2]

    @pytest.mark.it("❌  Should fail on a window below 2")
    def test_window_too_small(self, noisy_series: TimeSeries) -> None:
        with pytest.raises(InvalidWindowException):
            VolatilityEstimator.rolling_volatility(noisy_series, 1)

    @pytest.mark.it("❌  Should fail on an odd centered window")
    def test_odd_centered(self, noisy_series: TimeSeries) -> None:
        with pytest.raises(InvalidWindowException) as exc_info:
            VolatilityEstimator.rolling_volatility(noisy_series, 101, MeanKind.CENTERED)

        assert exc_info.value.exit_code == 2

    @pytest.mark.it("❌  Should fail on a series shorter than the window")
    def test_short_series(self, series_factory: SeriesFactory) -> None:
        with pytest.raises(InsufficientHistoryException) as exc_info:
            VolatilityEstimator.rolling_volatility(series_factory(np.ones(50)), 100)

        assert exc_info.value.exit_code == 1


@pytest.mark.describe("🧪  VolatilityEstimator.volatility_scales")
class TestVolatilityScales:
    @pytest.mark.it("✅  Should key the scales in the order given")
    def test_order(self, noisy_series: TimeSeries) -> None:
        scales = VolatilityEstimator.volatility_scales(noisy_series, [500, 100, 250])

        assert list(scales) == [500, 100, 250]
        assert all(vol.mean_kind is MeanKind.CENTERED for vol in scales.values())


def volatility_of(series: TimeSeries, window: int, mean_kind: MeanKind) -> VolatilitySeries:
    return VolatilitySeries(values=series, window=window, mean_kind=mean_kind)


@pytest.mark.describe("🧪  VolatilityEstimator.forecast_volatility")
class TestForecastVolatility:
    @pytest.mark.it("✅  Should keep a constant volatility")
    def test_constant(self, series_factory: SeriesFactory) -> None:
        vol = volatility_of(series_factory(np.full(100, 2.5), offset=9), 10, MeanKind.CAUSAL)

        run = VolatilityEstimator.forecast_volatility(vol, Horizon(15))

        np.testing.assert_allclose(run.predicted[run.valid], 2.5, rtol=1e-12)

    @pytest.mark.it("✅  Should recover a linearly growing volatility's slope")
    def test_linear(self, series_factory: SeriesFactory) -> None:
        k = np.arange(200)
        vol = volatility_of(series_factory(1.0 + 0.01 * k, offset=9), 10, MeanKind.CAUSAL)

        run = VolatilityEstimator.forecast_volatility(vol, Horizon(15))

        issued = run.issued_at[run.valid]
        current = vol.values.take(issued)
        # the causal mean of a ramp lags the ramp by (n - 1) / 2 samples
        expected = current - 0.01 * 9 / 2 + 0.01 * 15
        assert issued[0] == 18
        np.testing.assert_allclose(run.predicted[run.valid], expected, rtol=1e-12)

    @pytest.mark.it("✅  Should forecast the causal volatility of a real series")
    def test_from_series(self, noisy_series: TimeSeries) -> None:
        vol = VolatilityEstimator.rolling_volatility(noisy_series, 250)

        run = VolatilityEstimator.forecast_volatility(vol, Horizon(15))

        assert run.issued_at[run.valid][0] == 249 + 249
        assert np.isfinite(run.predicted[run.valid]).all()

    @pytest.mark.it("✅  Should follow a step increase in noise within the window lag")
    def test_noise_step(self, series_factory: SeriesFactory) -> None:
        rng = np.random.default_rng(5)
        series = series_factory(20.0 + np.r_[rng.normal(0, 1, 3000), rng.normal(0, 4, 3000)])
        vol = VolatilityEstimator.rolling_volatility(series, 100)

        run = VolatilityEstimator.forecast_volatility(vol, Horizon(15))

        issued, predicted = run.issued_at[run.valid], run.predicted[run.valid]
        before = predicted[(issued >= 1000) & (issued < 3000)]
        after = predicted[issued >= 3300]
        assert abs(before.mean() - 1.0) < 0.1
        assert before.max() < 1.5
        assert abs(after.mean() - 4.0) < 0.3
        first_rise = issued[predicted > 2.5][0]
        assert 3000 < first_rise <= 3200

    @pytest.mark.it("❌  Should refuse a centered volatility")
    def test_centered(self, noisy_series: TimeSeries) -> None:
        vol = VolatilityEstimator.rolling_volatility(noisy_series, 250, MeanKind.CENTERED)

        with pytest.raises(AcausalInputException) as exc_info:
            VolatilityEstimator.forecast_volatility(vol, Horizon(15))

        assert exc_info.value.exit_code == 2
