from .settings import TrendcastSettings, get_settings

__all__ = ["TrendcastSettings", "get_settings"]
