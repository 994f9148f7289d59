from .volatility_estimator import VolatilityEstimator

__all__ = ["VolatilityEstimator"]
