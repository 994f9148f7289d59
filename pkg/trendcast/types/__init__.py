from .affine_fit import AffineFit
from .custom_base_exception import (
    EXIT_DATA_INSUFFICIENT,
    EXIT_SUCCESS,
    EXIT_USAGE,
    TrendcastException,
)
from .custom_enum import CustomEnum, ForecastMethod, MeanKind
from .forecast_run import DayOffset, ForecastParams, ForecastRun, Horizon, ScaleFactor
from .time_series import IndexRange, TimeSeries, Window
from .trend_decomposition import TrendDecomposition
from .volatility_series import VolatilitySeries

__all__ = [
    "EXIT_DATA_INSUFFICIENT",
    "EXIT_SUCCESS",
    "EXIT_USAGE",
    "AffineFit",
    "CustomEnum",
    "DayOffset",
    "ForecastMethod",
    "ForecastParams",
    "ForecastRun",
    "Horizon",
    "IndexRange",
    "MeanKind",
    "ScaleFactor",
    "TimeSeries",
    "TrendDecomposition",
    "TrendcastException",
    "VolatilitySeries",
    "Window",
]
