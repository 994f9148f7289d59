from .decomposition import FluctuationCheck, TrendDecomposer
from .moving_average import MovingAverage

__all__ = ["FluctuationCheck", "MovingAverage", "TrendDecomposer"]
