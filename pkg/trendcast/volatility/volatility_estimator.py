from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from trendcast.constants.defaults import VOLATILITY_CHUNK, VOLATILITY_WINDOWS
from trendcast.forecast.runner import ForecastRunner
from trendcast.series.window_utils import WindowUtils
from trendcast.types.custom_enum import ForecastMethod, MeanKind
from trendcast.types.forecast_run import ForecastParams, ForecastRun, Horizon
from trendcast.types.generic_types_var import FloatArray
from trendcast.types.series_exceptions import AcausalInputException, InvalidWindowException
from trendcast.types.time_series import TimeSeries
from trendcast.types.volatility_series import VolatilitySeries


class VolatilityEstimator:
    """Rolling standard deviation of a series around its own windowed mean.

    ``vol(X)(i) = sqrt(E((X - E(X))**2))`` over the ``n`` samples of the chosen mean (trailing
    for causal, leaning one sample forward for centered). The normalization is by ``n``.
    """

    @staticmethod
    def window_std(values: FloatArray, n: int, chunk: int = VOLATILITY_CHUNK) -> FloatArray:
        """Population standard deviation of every ``n``-sample window.

        Each window is shifted by its first sample and then centered on its own mean before
        squaring, in blocks of ``chunk`` windows. Constant windows give exactly 0.
        """
        windows = sliding_window_view(np.asarray(values, dtype=np.float64), n)
        out = np.empty(windows.shape[0], dtype=np.float64)
        for start in range(0, windows.shape[0], chunk):
            block = windows[start : start + chunk]
            shifted = block - block[:, :1]
            deviations = shifted - shifted.mean(axis=1, keepdims=True)
            variance = np.mean(deviations * deviations, axis=1)
            out[start : start + chunk] = np.sqrt(np.maximum(variance, 0.0))
        return out

    @staticmethod
    def rolling_volatility(
        series: TimeSeries, n: int, mean_kind: MeanKind = MeanKind.CAUSAL
    ) -> VolatilitySeries:
        """Volatility of ``series`` at time scale ``n``.

        Raises:
            InvalidWindowException: If ``n < 2``, or ``n`` is odd with a centered mean.
            InsufficientHistoryException: If the series is shorter than ``n``.

        """
        if n < 2:
            raise InvalidWindowException(
                f"Volatility window must be at least 2 samples, got {n}", loc=["n"]
            )
        if mean_kind is MeanKind.CENTERED and n % 2:
            raise InvalidWindowException(
                f"Centered volatility window must be even, got {n}", loc=["n"]
            )
        WindowUtils.require_length(series, n, "Volatility")

        lead = n - 1 if mean_kind is MeanKind.CAUSAL else n // 2 - 1
        values = series.with_values(
            VolatilityEstimator.window_std(series.values, n), offset=series.offset + lead
        )
        return VolatilitySeries(values=values, window=n, mean_kind=mean_kind)

    @staticmethod
    def forecast_volatility(
        vol: VolatilitySeries,
        dt: Horizon,
        slope_window: int | None = None,
        trend_window: int | None = None,
    ) -> ForecastRun:
        """Algebraic forecast of the volatility series itself.

        Trend and slope windows default to the volatility's own window.

        Raises:
            AcausalInputException: If ``vol`` was computed with a centered mean.
            EmptyRunException: If the volatility series is too short for one forecast.

        """
        if vol.mean_kind is not MeanKind.CAUSAL:
            raise AcausalInputException(
                "Volatility computed with a centered mean reads future samples and cannot be "
                "forecast; use a causal mean",
                loc=["mean_kind", vol.mean_kind.value],
            )
        params = ForecastParams(
            trend_window=trend_window or vol.window, slope_window=slope_window or vol.window
        )
        return ForecastRunner.run_forecaster(vol.values, ForecastMethod.AL, dt, params)

    @staticmethod
    def volatility_scales(
        series: TimeSeries,
        windows: Iterable[int] = VOLATILITY_WINDOWS,
        mean_kind: MeanKind = MeanKind.CENTERED,
        threads: int | None = None,
    ) -> dict[int, VolatilitySeries]:
        """Volatility at several time scales, computed concurrently, keyed in ``windows`` order."""
        windows = list(windows)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(
                lambda n: VolatilityEstimator.rolling_volatility(series, n, mean_kind), windows
            )
            return dict(zip(windows, results, strict=True))
