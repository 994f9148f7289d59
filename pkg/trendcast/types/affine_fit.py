from dataclasses import dataclass

from trendcast.types.time_series import Window


@dataclass(slots=True, frozen=True)
class AffineFit:
    """Level and slope of the first-degree model fitted on one window.

    Attributes:
        level_at_end (float): Estimated value at the window's last sample, series units.
        slope_per_minute (float): Estimated slope, series units per minute.
        window (Window): The fitted window.

    """

    level_at_end: float
    slope_per_minute: float
    window: Window
