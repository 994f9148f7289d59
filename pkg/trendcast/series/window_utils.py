from trendcast.types.generic_types_var import FloatArray
from trendcast.types.series_exceptions import InsufficientHistoryException, WindowBoundsException
from trendcast.types.time_series import TimeSeries, Window


class WindowUtils:
    @staticmethod
    def slice_window(series: TimeSeries, window: Window) -> FloatArray:
        """The ``window.length`` values ending at ``window.end_index``, oldest first.

        Raises:
            WindowBoundsException: If the window leaves the series' valid range; ``loc`` names the
                violated edge (``"start"`` or ``"end"``).

        """
        if window.start_index < series.offset:
            raise WindowBoundsException(
                f"Window [{window.start_index}, {window.end_index}] starts before index "
                f"{series.offset}",
                loc=["start", window.start_index],
            )
        if window.end_index > series.end_index:
            raise WindowBoundsException(
                f"Window [{window.start_index}, {window.end_index}] ends after index "
                f"{series.end_index}",
                loc=["end", window.end_index],
            )
        first = window.start_index - series.offset
        return series.values[first : first + window.length]

    @staticmethod
    def require_length(series: TimeSeries, n: int, what: str) -> None:
        if len(series) < n:
            raise InsufficientHistoryException(
                f"{what} needs {n} samples, the series has {len(series)}",
                loc=["n", n],
            )
