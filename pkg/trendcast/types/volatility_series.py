from dataclasses import dataclass

from trendcast.types.custom_enum import MeanKind
from trendcast.types.time_series import TimeSeries


@dataclass(slots=True, frozen=True)
class VolatilitySeries:
    values: TimeSeries
    window: int
    mean_kind: MeanKind
