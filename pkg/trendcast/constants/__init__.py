from . import defaults
from . import regex_expressions as regex

__all__ = ["defaults", "regex"]
