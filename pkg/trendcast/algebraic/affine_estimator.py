from collections.abc import Sequence

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from trendcast.constants.defaults import SLOPE_WINDOW
from trendcast.series.window_utils import WindowUtils
from trendcast.trend.moving_average import MovingAverage
from trendcast.types.affine_fit import AffineFit
from trendcast.types.generic_types_var import FloatArray
from trendcast.types.series_exceptions import DegenerateWindowException, NonFiniteInputException
from trendcast.types.time_series import TimeSeries, Window


class AffineEstimator:
    """Sliding-window estimation of the first-degree model ``p(tau) = a0 + a1 * tau``.

    In continuous time, over a window of duration ``T`` with ``tau`` measured from its start,
    annihilating the model and integrating yields::

        a1 = 6 / T**3 * integral_0^T (2 tau - T) y(tau) dtau
        a0 = 2 / T**2 * integral_0^T (2 T - 3 tau) y(tau) dtau

    The iterated integrals average the window, which is what attenuates the noise. The sampled
    realization used here is the exact discrete least-squares counterpart of these integrals: it
    coincides with them in the continuum and is exact on affine samples, whereas trapezoid
    quadrature of the integrals carries a relative slope bias of ``2 h**2 / T**2``
    (see :meth:`fit_affine_integral`). Levels are reported at the window's last sample.
    """

    @staticmethod
    def slope_weights(n: int, h: float) -> FloatArray:
        """Weights ``w`` with ``slope = w @ y`` for an ``n``-sample window at step ``h``."""
        centered = np.arange(n, dtype=np.float64) - (n - 1) / 2
        return centered * (12.0 / (h * n * (n * n - 1)))

    @staticmethod
    def fit_affine(
        samples: Sequence[float] | FloatArray, h: float, end_index: int | None = None
    ) -> AffineFit:
        """Fit level and slope on one window.

        Args:
            samples: ``N >= 2`` samples, oldest first.
            h: Sample step in minutes.
            end_index: Grid index of the last sample, recorded on the returned window;
                defaults to ``N - 1``.

        Returns:
            AffineFit: ``slope_per_minute`` and ``level_at_end``.

        Raises:
            DegenerateWindowException: If ``N < 2`` or ``h <= 0``.
            NonFiniteInputException: If a sample is NaN or infinite.

        """
        y = AffineEstimator._checked_samples(samples, h)
        n = y.size

        slope = float(AffineEstimator.slope_weights(n, h) @ y)
        level = float(np.mean(y)) + slope * h * (n - 1) / 2
        end = n - 1 if end_index is None else end_index
        return AffineFit(level_at_end=level, slope_per_minute=slope, window=Window(end, n))

    @staticmethod
    def fit_affine_integral(
        samples: Sequence[float] | FloatArray, h: float, end_index: int | None = None
    ) -> AffineFit:
        """The continuous-time estimator with its integrals evaluated by trapezoid quadrature.

        Kept as the reference form of :meth:`fit_affine`; forecasting does not use it.
        """
        y = AffineEstimator._checked_samples(samples, h)
        n = y.size
        duration = (n - 1) * h
        tau = np.arange(n, dtype=np.float64) * h

        slope = 6.0 / duration**3 * float(np.trapezoid((2 * tau - duration) * y, dx=h))
        level_at_start = (
            2.0 / duration**2 * float(np.trapezoid((2 * duration - 3 * tau) * y, dx=h))
        )
        end = n - 1 if end_index is None else end_index
        return AffineFit(
            level_at_end=level_at_start + slope * duration,
            slope_per_minute=slope,
            window=Window(end, n),
        )

    @staticmethod
    def slope_series(series: TimeSeries, n: int = SLOPE_WINDOW) -> TimeSeries:
        """Slope of the trailing ``n``-sample fit at every index ``i >= offset + n - 1``."""
        AffineEstimator._check_window(series, n)
        windows = sliding_window_view(series.values, n)
        slopes = windows @ AffineEstimator.slope_weights(n, series.step_minutes)
        return series.with_values(
            slopes, offset=series.offset + n - 1, unit_label=f"{series.unit_label}/min"
        )

    @staticmethod
    def level_series(series: TimeSeries, n: int = SLOPE_WINDOW) -> TimeSeries:
        """Fitted value at the last sample of every trailing ``n``-sample window."""
        slopes = AffineEstimator.slope_series(series, n)
        means = MovingAverage.rolling_mean(series.values, n)
        return series.with_values(
            means + slopes.values * series.step_minutes * (n - 1) / 2,
            offset=slopes.offset,
        )

    @staticmethod
    def _checked_samples(samples: Sequence[float] | FloatArray, h: float) -> FloatArray:
        y = np.asarray(samples, dtype=np.float64).reshape(-1)
        if y.size < 2:
            raise DegenerateWindowException(
                f"An affine fit needs at least 2 samples, got {y.size}", loc=["samples"]
            )
        if not h > 0:
            raise DegenerateWindowException(f"Step must be positive, got {h}", loc=["h"])
        bad = np.flatnonzero(~np.isfinite(y))
        if bad.size:
            raise NonFiniteInputException(
                f"Sample {int(bad[0])} is {y[bad[0]]}", loc=["samples", int(bad[0])]
            )
        return y

    @staticmethod
    def _check_window(series: TimeSeries, n: int) -> None:
        if n < 2:
            raise DegenerateWindowException(
                f"Slope window must be at least 2 samples, got {n}", loc=["n"]
            )
        WindowUtils.require_length(series, n, "Slope estimation")
