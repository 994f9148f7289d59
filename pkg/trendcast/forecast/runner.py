from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from loguru import logger

from trendcast.algebraic.affine_estimator import AffineEstimator
from trendcast.forecast.forecasters import Forecasters
from trendcast.trend.moving_average import MovingAverage
from trendcast.types.custom_enum import ForecastMethod
from trendcast.types.forecast_run import ForecastParams, ForecastRun, Horizon
from trendcast.types.series_exceptions import EmptyRunException
from trendcast.types.time_series import TimeSeries

logger = logger.bind(name=__name__)

RunKey = tuple[ForecastMethod, int]


class ForecastRunner:
    """Aligns a forecaster over every issue index of a series.

    The trend is the causal mean of ``params.trend_window`` samples and the slope is the trailing
    affine fit of ``params.slope_window`` samples, both taken on the input series. Callers that
    forecast several methods or horizons can pass precomputed ``trend`` and ``slope`` series.
    """

    @staticmethod
    def first_issue_index(
        series: TimeSeries,
        method: ForecastMethod,
        params: ForecastParams,
        trend_offset: int | None = None,
        slope_offset: int | None = None,
    ) -> int:
        """Smallest grid index at which ``method`` has all the history it reads."""
        if trend_offset is None:
            trend_offset = series.offset + params.trend_window - 1
        if slope_offset is None:
            slope_offset = series.offset + params.slope_window - 1
        day = params.day_for(series.step_minutes).samples_per_day

        match method:
            case ForecastMethod.RAW_PERSISTENCE:
                return series.offset
            case ForecastMethod.AL:
                return max(trend_offset, slope_offset)
            case ForecastMethod.PE:
                return trend_offset + day
            case ForecastMethod.MI:
                return max(trend_offset + day, slope_offset)

    @staticmethod
    def run_forecaster(
        series: TimeSeries,
        method: ForecastMethod,
        dt: Horizon,
        params: ForecastParams = ForecastParams(),
        *,
        trend: TimeSeries | None = None,
        slope: TimeSeries | None = None,
    ) -> ForecastRun:
        """Forecast ``dt`` samples ahead from every index of ``series``.

        ``issued_at`` covers the whole valid range of ``series``. An entry is valid when the
        method's history exists at the issue index and the target ``i + dt`` is still inside the
        series; other entries hold NaN.

        Raises:
            EmptyRunException: If no issue index is valid. The message names the series length
                the method needs.

        """
        first = ForecastRunner.first_issue_index(
            series,
            method,
            params,
            trend_offset=None if trend is None else trend.offset,
            slope_offset=None if slope is None else slope.offset,
        )
        last = series.end_index - dt.delta_t
        if first > last:
            required = first - series.offset + dt.delta_t + 1
            raise EmptyRunException(
                f"{method.value} at horizon {dt.delta_t} needs at least {required} samples, "
                f"the series has {len(series)}",
                loc=[method.token, dt.delta_t, required],
            )

        issued_at = series.valid_range.indices()
        valid = (issued_at >= first) & (issued_at <= last)
        at = issued_at[valid]
        predicted = np.full(issued_at.size, np.nan)
        neutral = np.zeros(issued_at.size, dtype=bool)

        if method is ForecastMethod.RAW_PERSISTENCE:
            predicted[valid] = Forecasters.persistence(series, at, dt)
        else:
            if trend is None:
                trend = MovingAverage.causal_mean(series, params.trend_window)
            day = params.day_for(series.step_minutes)

            if method is ForecastMethod.AL:
                if slope is None:
                    slope = AffineEstimator.slope_series(series, params.slope_window)
                predicted[valid] = Forecasters.algebraic_forecast(trend, slope, at, dt)
            elif method is ForecastMethod.PE:
                predicted[valid] = Forecasters.scaled_persistence(trend, at, dt, day, params.eps)
            else:
                if slope is None:
                    slope = AffineEstimator.slope_series(series, params.slope_window)
                predicted[valid] = Forecasters.mixed_forecast(
                    trend, slope, at, dt, day, params.eps
                )
            if method in (ForecastMethod.PE, ForecastMethod.MI):
                neutral[valid] = Forecasters.scale_factor(trend, at, dt, day, params.eps).neutral

        flagged = int(np.count_nonzero(neutral))
        if flagged:
            logger.debug(
                f"{method.value} dt={dt.delta_t}: {flagged} samples used neutral scaling"
            )
        return ForecastRun(
            method=method,
            horizon=dt,
            issued_at=issued_at,
            predicted=predicted,
            valid=valid,
            neutral=neutral,
        )

    @staticmethod
    def run_many(
        series: TimeSeries,
        methods: Sequence[ForecastMethod],
        horizons: Sequence[Horizon],
        params: ForecastParams = ForecastParams(),
        threads: int | None = None,
    ) -> dict[RunKey, ForecastRun]:
        """Run every method at every horizon on a thread pool.

        Trend and slope are computed once and shared. The result is keyed by
        ``(method, delta_t)`` in the order of ``methods`` then ``horizons``.

        Raises:
            EmptyRunException: From the first failing run, in key order.

        """
        keys = [(method, horizon) for method in methods for horizon in horizons]
        if not keys:
            return {}

        needs_trend = any(m is not ForecastMethod.RAW_PERSISTENCE for m in methods)
        needs_slope = any(m in (ForecastMethod.AL, ForecastMethod.MI) for m in methods)
        trend = slope = None
        if needs_trend and len(series) >= params.trend_window:
            trend = MovingAverage.causal_mean(series, params.trend_window)
        if needs_slope and len(series) >= params.slope_window:
            slope = AffineEstimator.slope_series(series, params.slope_window)

        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(
                    ForecastRunner.run_forecaster,
                    series,
                    method,
                    horizon,
                    params,
                    trend=trend,
                    slope=slope,
                )
                for method, horizon in keys
            ]
            return {
                (method, horizon.delta_t): future.result()
                for (method, horizon), future in zip(keys, futures, strict=True)
            }
