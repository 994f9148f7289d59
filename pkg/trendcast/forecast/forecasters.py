from typing import NamedTuple

import numpy as np

from trendcast.constants.defaults import SCALE_EPS
from trendcast.types.forecast_run import DayOffset, Horizon, ScaleFactor
from trendcast.types.generic_types_var import FloatArray, IndexLike
from trendcast.types.series_exceptions import InsufficientHistoryException, WindowBoundsException
from trendcast.types.time_series import TimeSeries


class MixedSlope(NamedTuple):
    chosen: float | FloatArray
    algebraic: float | FloatArray
    persistence: float | FloatArray


def _history(series: TimeSeries, indices: IndexLike, what: str) -> FloatArray:
    try:
        return np.asarray(series.take(indices), dtype=np.float64)
    except WindowBoundsException as exc:
        raise InsufficientHistoryException(
            f"{what} is not available: {exc.msg}", loc=[what, *exc.loc]
        ) from exc


def _shaped(result: FloatArray, i: IndexLike) -> float | FloatArray:
    return float(result) if np.ndim(i) == 0 else result


class Forecasters:
    """The four point forecasters.

    Every operation takes the issue index ``i`` (an ``int`` or an index array) and returns the
    value forecast for ``i + dt``. Trends are the causal ``E_n`` series; slopes are per minute.
    """

    @staticmethod
    def persistence(series: TimeSeries, i: IndexLike, dt: Horizon) -> float | FloatArray:
        """The current value is the forecast."""
        return _shaped(_history(series, i, "value"), i)

    @staticmethod
    def scale_factor(
        trend: TimeSeries, i: IndexLike, dt: Horizon, day: DayOffset, eps: float = SCALE_EPS
    ) -> ScaleFactor:
        """``S_c = E(t - 1day + dt) / E(t - 1day)``.

        Where ``|E(t - 1day)| < eps``, or the day-lagged trend is exactly 0, the ratio is replaced
        by the neutral value 1 and the sample is flagged ``neutral``.

        Raises:
            InsufficientHistoryException: If the day-lagged trend is not available.

        """
        lag = np.asarray(i, dtype=np.int64) - day.samples_per_day
        denominator = _history(trend, lag, "day-lagged trend")
        numerator = _history(trend, lag + dt.delta_t, "day-lagged trend")

        neutral = (np.abs(denominator) < eps) | (denominator == 0)
        ratio = np.divide(
            numerator, denominator, out=np.ones_like(denominator), where=~neutral
        )
        if np.ndim(i) == 0:
            return ScaleFactor(float(ratio), bool(neutral))
        return ScaleFactor(ratio, neutral)

    @staticmethod
    def scaled_persistence(
        trend: TimeSeries, i: IndexLike, dt: Horizon, day: DayOffset, eps: float = SCALE_EPS
    ) -> float | FloatArray:
        """``E(t) * S_c(t)``: today's trend scaled by yesterday's relative change over ``dt``."""
        factor = Forecasters.scale_factor(trend, i, dt, day, eps)
        return _shaped(_history(trend, i, "trend") * factor.value, i)

    @staticmethod
    def algebraic_forecast(
        trend: TimeSeries, slope: TimeSeries, i: IndexLike, dt: Horizon
    ) -> float | FloatArray:
        """``E(t) + a1(t) * dt``: the trend extrapolated along its estimated slope."""
        minutes = dt.minutes(trend.step_minutes)
        level = _history(trend, i, "trend")
        return _shaped(level + _history(slope, i, "slope") * minutes, i)

    @staticmethod
    def mixed_slope(
        trend: TimeSeries,
        slope: TimeSeries,
        i: IndexLike,
        dt: Horizon,
        day: DayOffset,
        eps: float = SCALE_EPS,
    ) -> MixedSlope:
        """The slope of the mixed forecast and the two candidates it is chosen from.

        The persistence-implied slope is ``E(t) * (S_c(t) - 1) / dt``. The algebraic slope is
        kept only when its magnitude is strictly smaller; ties go to the persistence slope.
        """
        minutes = dt.minutes(trend.step_minutes)
        level = _history(trend, i, "trend")
        algebraic = _history(slope, i, "slope")
        factor = Forecasters.scale_factor(trend, i, dt, day, eps)
        persistence = level * (np.asarray(factor.value) - 1.0) / minutes

        chosen = np.where(np.abs(algebraic) < np.abs(persistence), algebraic, persistence)
        return MixedSlope(_shaped(chosen, i), _shaped(algebraic, i), _shaped(persistence, i))

    @staticmethod
    def mixed_forecast(
        trend: TimeSeries,
        slope: TimeSeries,
        i: IndexLike,
        dt: Horizon,
        day: DayOffset,
        eps: float = SCALE_EPS,
    ) -> float | FloatArray:
        """``E(t) + a1~(t) * dt`` with the smaller-magnitude slope of :meth:`mixed_slope`."""
        minutes = dt.minutes(trend.step_minutes)
        mixed = Forecasters.mixed_slope(trend, slope, i, dt, day, eps)
        return _shaped(_history(trend, i, "trend") + np.asarray(mixed.chosen) * minutes, i)
