from .traffic_generator import REFERENCE_SEED, TrafficGenerator

__all__ = ["REFERENCE_SEED", "TrafficGenerator"]
