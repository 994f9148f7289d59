from dataclasses import dataclass

from trendcast.types.custom_enum import MeanKind
from trendcast.types.time_series import IndexRange, TimeSeries


@dataclass(slots=True, frozen=True)
class TrendDecomposition:
    """``original == trend + fluctuation`` on ``valid_range``."""

    trend: TimeSeries
    fluctuation: TimeSeries
    valid_range: IndexRange
    kind: MeanKind
    window: int
