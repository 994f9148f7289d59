from collections.abc import Sequence
from dataclasses import dataclass, field
from datetime import datetime, timedelta

import numpy as np

from trendcast.types.generic_types_var import FloatArray, IntArray
from trendcast.types.series_exceptions import (
    InvalidSeriesException,
    InvalidWindowException,
    WindowBoundsException,
)


@dataclass(slots=True, frozen=True)
class IndexRange:
    """Closed interval ``[first, last]`` of grid indices."""

    first: int
    last: int

    def __post_init__(self) -> None:
        if self.last < self.first:
            raise InvalidWindowException(
                f"Empty index range [{self.first}, {self.last}]", loc=["first", "last"]
            )

    def __len__(self) -> int:
        return self.last - self.first + 1

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int | np.integer) and self.first <= index <= self.last

    def indices(self) -> IntArray:
        return np.arange(self.first, self.last + 1, dtype=np.int64)


@dataclass(slots=True, frozen=True)
class Window:
    end_index: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise InvalidWindowException(
                f"Window length must be positive, got {self.length}", loc=["length"]
            )
        if self.start_index < 0:
            raise WindowBoundsException(
                f"Window of length {self.length} ending at {self.end_index} starts before index 0",
                loc=["start"],
            )

    @property
    def start_index(self) -> int:
        return self.end_index - self.length + 1


@dataclass(slots=True, frozen=True, eq=False)
class TimeSeries:
    """Regularly sampled real-valued signal.

    Grid index ``i`` maps to ``start_time + i * step_minutes``. ``values[k]`` holds the sample of
    grid index ``offset + k``; derived series (trends, slopes, volatilities) keep the parent's
    ``start_time`` and store only the indices on which they are defined.

    Attributes:
        start_time (datetime): Naive timestamp of grid index 0, minute resolution.
        step_minutes (int): Sample interval in minutes.
        values (FloatArray): Read-only finite samples.
        unit_label (str): Free text unit, e.g. ``"veh/min"``.
        offset (int): Grid index of ``values[0]``.

    """

    start_time: datetime
    step_minutes: int
    values: FloatArray
    unit_label: str = "veh/min"
    offset: int = field(default=0)

    def __post_init__(self) -> None:
        if self.start_time.tzinfo is not None:
            raise InvalidSeriesException("start_time must be a naive timestamp", loc=["start_time"])
        if self.start_time.second or self.start_time.microsecond:
            raise InvalidSeriesException(
                "start_time must have minute resolution", loc=["start_time"]
            )
        if int(self.step_minutes) != self.step_minutes or self.step_minutes < 1:
            raise InvalidSeriesException(
                f"step_minutes must be a positive integer, got {self.step_minutes}",
                loc=["step_minutes"],
            )
        if self.offset < 0:
            raise InvalidSeriesException(f"offset must be >= 0, got {self.offset}", loc=["offset"])

        values = np.array(self.values, dtype=np.float64).reshape(-1)
        if values.size == 0:
            raise InvalidSeriesException("values must be non-empty", loc=["values"])
        non_finite = np.flatnonzero(~np.isfinite(values))
        if non_finite.size:
            raise InvalidSeriesException(
                f"values must be finite; index {int(non_finite[0]) + self.offset} is {values[non_finite[0]]}",
                loc=["values", int(non_finite[0]) + self.offset],
            )
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "step_minutes", int(self.step_minutes))

    def __len__(self) -> int:
        return int(self.values.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return (
            self.start_time == other.start_time
            and self.step_minutes == other.step_minutes
            and self.offset == other.offset
            and self.unit_label == other.unit_label
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None

    @property
    def end_index(self) -> int:
        return self.offset + len(self) - 1

    @property
    def valid_range(self) -> IndexRange:
        return IndexRange(self.offset, self.end_index)

    @property
    def step(self) -> timedelta:
        return timedelta(minutes=self.step_minutes)

    def time_at(self, index: int) -> datetime:
        return self.start_time + index * self.step

    def index_of(self, timestamp: datetime) -> int:
        minutes, remainder = divmod(timestamp - self.start_time, self.step)
        if remainder:
            raise WindowBoundsException(
                f"{timestamp.isoformat()} is not on the {self.step_minutes}-minute grid",
                loc=["timestamp"],
            )
        return int(minutes)

    def contains(self, index: int) -> bool:
        return self.offset <= index <= self.end_index

    def value_at(self, index: int) -> float:
        return float(self.take(np.asarray(index)))

    def take(self, indices: int | IntArray) -> FloatArray:
        """Values at grid ``indices``, bounds-checked against the valid range.

        Raises:
            WindowBoundsException: If any index falls outside ``valid_range``; ``loc`` names the
                violated edge.

        """
        idx = np.asarray(indices, dtype=np.int64)
        if idx.size:
            if int(idx.min()) < self.offset:
                raise WindowBoundsException(
                    f"Index {int(idx.min())} precedes the first valid index {self.offset}",
                    loc=["start", int(idx.min())],
                )
            if int(idx.max()) > self.end_index:
                raise WindowBoundsException(
                    f"Index {int(idx.max())} exceeds the last valid index {self.end_index}",
                    loc=["end", int(idx.max())],
                )
        return self.values[idx - self.offset]

    def with_values(
        self,
        values: Sequence[float] | FloatArray,
        *,
        offset: int | None = None,
        unit_label: str | None = None,
    ) -> "TimeSeries":
        """A series on the same grid carrying new values."""
        return TimeSeries(
            start_time=self.start_time,
            step_minutes=self.step_minutes,
            values=values,
            unit_label=self.unit_label if unit_label is None else unit_label,
            offset=self.offset if offset is None else offset,
        )

    def scaled(self, factor: float, shift: float = 0.0) -> "TimeSeries":
        return self.with_values(self.values * factor + shift)
