from collections.abc import Iterable
from typing import NamedTuple

import numpy as np

from trendcast.constants.defaults import TREND_WINDOW, VOLATILITY_WINDOWS
from trendcast.trend.moving_average import MovingAverage
from trendcast.types.custom_enum import MeanKind
from trendcast.types.series_exceptions import InsufficientHistoryException
from trendcast.types.time_series import TimeSeries
from trendcast.types.trend_decomposition import TrendDecomposition


class FluctuationCheck(NamedTuple):
    max_abs_window_mean: float
    bound: float

    @property
    def holds(self) -> bool:
        return self.max_abs_window_mean <= self.bound


class TrendDecomposer:
    @staticmethod
    def decompose(
        series: TimeSeries, trend_kind: MeanKind = MeanKind.CAUSAL, n: int = TREND_WINDOW
    ) -> TrendDecomposition:
        """Split ``series`` into a moving-average trend and the quick fluctuations around it.

        Args:
            series: The signal to decompose.
            trend_kind: Causal (trailing) or centered mean.
            n: Window length in samples.

        Returns:
            TrendDecomposition: ``trend`` and ``fluctuation`` share ``series``' grid and are both
                defined exactly on ``valid_range``.

        """
        trend = MovingAverage.mean(series, n, trend_kind)
        valid_range = trend.valid_range
        fluctuation = series.with_values(
            series.take(valid_range.indices()) - trend.values, offset=trend.offset
        )
        return TrendDecomposition(
            trend=trend,
            fluctuation=fluctuation,
            valid_range=valid_range,
            kind=trend_kind,
            window=n,
        )

    @staticmethod
    def fluctuation_window_means(
        decomposition: TrendDecomposition, n: int = TREND_WINDOW
    ) -> FluctuationCheck:
        """Largest ``|mean|`` of the fluctuation over any full ``n``-sample window, with the bound
        ``3 * std / sqrt(n)`` that a quickly fluctuating residual stays under."""
        fluctuation = decomposition.fluctuation.values
        if fluctuation.size < max(n, 2):
            raise InsufficientHistoryException(
                f"Fluctuation check needs {max(n, 2)} samples, got {fluctuation.size}",
                loc=["n", n],
            )
        window_means = MovingAverage.rolling_mean(fluctuation, n)
        bound = 3.0 * float(np.std(fluctuation, ddof=1)) / np.sqrt(n)
        return FluctuationCheck(float(np.max(np.abs(window_means))), float(bound))

    @staticmethod
    def multi_scale_trends(
        series: TimeSeries,
        windows: Iterable[int] = VOLATILITY_WINDOWS,
        kind: MeanKind = MeanKind.CENTERED,
    ) -> dict[int, TimeSeries]:
        """Trends of ``series`` at several time scales; larger windows give smoother trends."""
        return {n: MovingAverage.mean(series, n, kind) for n in windows}
