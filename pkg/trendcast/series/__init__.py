from .csv_codec import ParsedSeries, SeriesCsvCodec
from .window_utils import WindowUtils

__all__ = ["ParsedSeries", "SeriesCsvCodec", "WindowUtils"]
