from trendcast.types.custom_base_exception import (
    EXIT_DATA_INSUFFICIENT,
    EXIT_USAGE,
    TrendcastException,
)


class CsvParseException(TrendcastException):
    def __init__(self, msg: str, loc: list[str | int] = None, _type: str = "CSV Parse Error") -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_USAGE
        super().__init__(msg, loc, _type)


class NonMonotoneTimestampException(TrendcastException):
    def __init__(
        self, msg: str, loc: list[str | int] = None, _type: str = "Non-monotone Timestamps"
    ) -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_USAGE
        super().__init__(msg, loc, _type)


class GapTooLargeException(TrendcastException):
    def __init__(self, msg: str, loc: list[str | int] = None, _type: str = "Gap Too Large") -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_USAGE
        super().__init__(msg, loc, _type)


class InvalidSeriesException(TrendcastException):
    def __init__(self, msg: str, loc: list[str | int] = None, _type: str = "Invalid Series") -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_USAGE
        super().__init__(msg, loc, _type)


class InvalidWindowException(TrendcastException):
    def __init__(self, msg: str, loc: list[str | int] = None, _type: str = "Invalid Window") -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_USAGE
        super().__init__(msg, loc, _type)


class DegenerateWindowException(TrendcastException):
    def __init__(
        self, msg: str, loc: list[str | int] = None, _type: str = "Degenerate Window"
    ) -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_USAGE
        super().__init__(msg, loc, _type)


class NonFiniteInputException(TrendcastException):
    def __init__(self, msg: str, loc: list[str | int] = None, _type: str = "Non-finite Input") -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_USAGE
        super().__init__(msg, loc, _type)


class AcausalInputException(TrendcastException):
    def __init__(self, msg: str, loc: list[str | int] = None, _type: str = "Acausal Input") -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_USAGE
        super().__init__(msg, loc, _type)


class ScenarioException(TrendcastException):
    def __init__(self, msg: str, loc: list[str | int] = None, _type: str = "Invalid Scenario") -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_USAGE
        super().__init__(msg, loc, _type)


class UsageException(TrendcastException):
    def __init__(self, msg: str, loc: list[str | int] = None, _type: str = "Usage Error") -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_USAGE
        super().__init__(msg, loc, _type)


class InvalidMetricException(TrendcastException):
    def __init__(self, msg: str, loc: list[str | int] = None, _type: str = "Invalid Metric") -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_USAGE
        super().__init__(msg, loc, _type)


class WindowBoundsException(TrendcastException):
    def __init__(self, msg: str, loc: list[str | int] = None, _type: str = "Window Bounds") -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_DATA_INSUFFICIENT
        super().__init__(msg, loc, _type)


class InsufficientHistoryException(TrendcastException):
    def __init__(
        self, msg: str, loc: list[str | int] = None, _type: str = "Insufficient History"
    ) -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_DATA_INSUFFICIENT
        super().__init__(msg, loc, _type)


class EmptyRunException(TrendcastException):
    def __init__(self, msg: str, loc: list[str | int] = None, _type: str = "Empty Run") -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_DATA_INSUFFICIENT
        super().__init__(msg, loc, _type)


class EmptyMaskException(TrendcastException):
    def __init__(self, msg: str, loc: list[str | int] = None, _type: str = "Empty Mask") -> None:
        if loc is None:
            loc = []
        self.exit_code = EXIT_DATA_INSUFFICIENT
        super().__init__(msg, loc, _type)

