import numpy as np

from trendcast.constants.defaults import RESUM_INTERVAL
from trendcast.series.window_utils import WindowUtils
from trendcast.types.custom_enum import MeanKind
from trendcast.types.generic_types_var import FloatArray
from trendcast.types.series_exceptions import InvalidWindowException
from trendcast.types.time_series import TimeSeries


class MovingAverage:
    @staticmethod
    def rolling_mean(
        values: FloatArray, n: int, resum_interval: int = RESUM_INTERVAL
    ) -> FloatArray:
        """Means of every ``n``-sample window, indexed by the window's last sample.

        Window sums come from differences of a running prefix sum, so each output costs O(1).
        The prefix sum restarts every ``resum_interval`` outputs and is accumulated relative to
        the block's first sample, which bounds rounding drift on long series and makes constant
        stretches exact.

        Args:
            values: Input samples.
            n: Window length, ``1 <= n <= len(values)``.
            resum_interval: Outputs per freshly accumulated block.

        Returns:
            FloatArray: ``len(values) - n + 1`` means; entry ``k`` covers ``values[k : k + n]``.

        """
        values = np.asarray(values, dtype=np.float64)
        if n == 1:
            return values.copy()

        count = values.size - n + 1
        out = np.empty(count, dtype=np.float64)
        for start in range(0, count, resum_interval):
            stop = min(start + resum_interval, count)
            block = values[start : stop + n - 1]
            anchor = block[0]
            prefix = np.concatenate(([0.0], np.cumsum(block - anchor)))
            out[start:stop] = anchor + (prefix[n:] - prefix[:-n]) / n
        return out

    @staticmethod
    def causal_mean(series: TimeSeries, n: int) -> TimeSeries:
        """Trailing mean ``(x[i-n+1] + ... + x[i]) / n``, defined for ``i >= offset + n - 1``.

        Raises:
            InvalidWindowException: If ``n < 1``.
            InsufficientHistoryException: If the series is shorter than ``n``.

        """
        if n < 1:
            raise InvalidWindowException(f"Window length must be >= 1, got {n}", loc=["n"])
        WindowUtils.require_length(series, n, "Causal mean")

        return series.with_values(
            MovingAverage.rolling_mean(series.values, n), offset=series.offset + n - 1
        )

    @staticmethod
    def centered_mean(series: TimeSeries, n: int) -> TimeSeries:
        """Non-causal mean over ``x[i-(n/2-1)] .. x[i+n/2]``.

        The span leans one sample toward the future, e.g. ``t-49 .. t+50`` for ``n = 100``.

        Raises:
            InvalidWindowException: If ``n`` is odd or smaller than 2.
            InsufficientHistoryException: If the series is shorter than ``n``.

        """
        if n < 2 or n % 2:
            raise InvalidWindowException(
                f"Centered window length must be even and >= 2, got {n}", loc=["n"]
            )
        WindowUtils.require_length(series, n, "Centered mean")

        return series.with_values(
            MovingAverage.rolling_mean(series.values, n), offset=series.offset + n // 2 - 1
        )

    @staticmethod
    def mean(series: TimeSeries, n: int, kind: MeanKind) -> TimeSeries:
        if kind is MeanKind.CENTERED:
            return MovingAverage.centered_mean(series, n)
        return MovingAverage.causal_mean(series, n)
