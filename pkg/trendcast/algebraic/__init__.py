from .affine_estimator import AffineEstimator

__all__ = ["AffineEstimator"]
