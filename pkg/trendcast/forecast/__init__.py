from .forecasters import Forecasters, MixedSlope
from .runner import ForecastRunner, RunKey

__all__ = ["ForecastRunner", "Forecasters", "MixedSlope", "RunKey"]
