from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from trendcast.constants.defaults import MINUTES_PER_DAY, SCALE_EPS, SLOPE_WINDOW, TREND_WINDOW
from trendcast.constants.defaults import HORIZONS as STANDARD_HORIZONS
from trendcast.types.custom_enum import ForecastMethod
from trendcast.types.generic_types_var import BoolArray, FloatArray, IntArray
from trendcast.types.series_exceptions import (
    InvalidSeriesException,
    InvalidWindowException,
    UsageException,
)


@dataclass(slots=True, frozen=True, order=True)
class Horizon:
    delta_t: int

    def __post_init__(self) -> None:
        if int(self.delta_t) != self.delta_t or self.delta_t < 1:
            raise InvalidWindowException(
                f"Horizon must be a positive number of samples, got {self.delta_t}",
                loc=["delta_t"],
            )
        object.__setattr__(self, "delta_t", int(self.delta_t))

    @property
    def is_standard(self) -> bool:
        return self.delta_t in STANDARD_HORIZONS

    def minutes(self, step_minutes: int) -> int:
        return self.delta_t * step_minutes


@dataclass(slots=True, frozen=True)
class DayOffset:
    samples_per_day: int

    def __post_init__(self) -> None:
        if self.samples_per_day < 1:
            raise InvalidWindowException(
                f"samples_per_day must be positive, got {self.samples_per_day}",
                loc=["samples_per_day"],
            )

    @classmethod
    def for_step(cls, step_minutes: int) -> "DayOffset":
        if MINUTES_PER_DAY % step_minutes:
            raise InvalidSeriesException(
                f"A day is not a whole number of {step_minutes}-minute samples",
                loc=["step_minutes"],
            )
        return cls(MINUTES_PER_DAY // step_minutes)


class ScaleFactor(NamedTuple):
    value: float | FloatArray
    neutral: bool | BoolArray


@dataclass(slots=True, frozen=True)
class ForecastParams:
    trend_window: int = TREND_WINDOW
    slope_window: int = SLOPE_WINDOW
    eps: float = SCALE_EPS
    day: DayOffset | None = None

    def __post_init__(self) -> None:
        if not self.eps > 0:
            raise UsageException(
                f"The scaling-factor guard must be positive, got {self.eps}", loc=["eps"]
            )

    def day_for(self, step_minutes: int) -> DayOffset:
        return self.day if self.day is not None else DayOffset.for_step(step_minutes)


@dataclass(slots=True, frozen=True, eq=False)
class ForecastRun:
    """Aligned forecasts of one method at one horizon.

    ``predicted[k]`` is the forecast issued at grid index ``issued_at[k]`` for index
    ``issued_at[k] + horizon.delta_t``. Entries outside ``valid`` are NaN. ``neutral`` marks the
    entries where the day-lagged scaling factor fell back to 1.
    """

    method: ForecastMethod
    horizon: Horizon
    issued_at: IntArray
    predicted: FloatArray
    valid: BoolArray
    neutral: BoolArray = field(default=None)

    def __post_init__(self) -> None:
        if self.neutral is None:
            object.__setattr__(self, "neutral", np.zeros_like(self.valid, dtype=bool))
        for name in ("issued_at", "predicted", "valid", "neutral"):
            getattr(self, name).setflags(write=False)

    @property
    def valid_count(self) -> int:
        return int(np.count_nonzero(self.valid))

    @property
    def targets(self) -> IntArray:
        return self.issued_at + self.horizon.delta_t
