import pytest

from tests.fixtures.types.custom_base_exception_fixtures import (
    basic_exception_data,
    full_exception_data,
)
from trendcast.types import EXIT_DATA_INSUFFICIENT, EXIT_USAGE, TrendcastException
from trendcast.types.series_exceptions import (
    AcausalInputException,
    CsvParseException,
    DegenerateWindowException,
    EmptyMaskException,
    EmptyRunException,
    GapTooLargeException,
    InsufficientHistoryException,
    InvalidMetricException,
    InvalidSeriesException,
    InvalidWindowException,
    NonFiniteInputException,
    NonMonotoneTimestampException,
    ScenarioException,
    UsageException,
    WindowBoundsException,
)

ALL_EXCEPTIONS = [
    (CsvParseException, EXIT_USAGE, "CSV Parse Error"),
    (NonMonotoneTimestampException, EXIT_USAGE, "Non-monotone Timestamps"),
    (GapTooLargeException, EXIT_USAGE, "Gap Too Large"),
    (InvalidSeriesException, EXIT_USAGE, "Invalid Series"),
    (InvalidWindowException, EXIT_USAGE, "Invalid Window"),
    (DegenerateWindowException, EXIT_USAGE, "Degenerate Window"),
    (NonFiniteInputException, EXIT_USAGE, "Non-finite Input"),
    (AcausalInputException, EXIT_USAGE, "Acausal Input"),
    (ScenarioException, EXIT_USAGE, "Invalid Scenario"),
    (UsageException, EXIT_USAGE, "Usage Error"),
    (InvalidMetricException, EXIT_USAGE, "Invalid Metric"),
    (WindowBoundsException, EXIT_DATA_INSUFFICIENT, "Window Bounds"),
    (InsufficientHistoryException, EXIT_DATA_INSUFFICIENT, "Insufficient History"),
    (EmptyRunException, EXIT_DATA_INSUFFICIENT, "Empty Run"),
    (EmptyMaskException, EXIT_DATA_INSUFFICIENT, "Empty Mask"),
]


@pytest.mark.describe("🧪  Series Exceptions")
class TestSeriesExceptions:
    @pytest.mark.it("✅  Should create exceptions with correct exit codes and types")
    @pytest.mark.parametrize("exception_class, exit_code, default_type", ALL_EXCEPTIONS)
    def test_exception_creation(
        self, exception_class: type, exit_code: int, default_type: str, basic_exception_data: dict
    ) -> None:
        exception = exception_class(basic_exception_data["msg"])

        assert isinstance(exception, TrendcastException)
        assert exception.exit_code == exit_code
        assert exception.msg == basic_exception_data["msg"]
        assert exception.loc == []
        assert exception.type == default_type

    @pytest.mark.it("✅  Should keep a given location and type")
    @pytest.mark.parametrize("exception_class", [entry[0] for entry in ALL_EXCEPTIONS])
    def test_full_data(self, exception_class: type, full_exception_data: dict) -> None:
        exception = exception_class(**full_exception_data)

        assert exception.loc == full_exception_data["loc"]
        assert exception.type == full_exception_data["_type"]

    @pytest.mark.it("❌  Should fail when the location is not a list")
    def test_invalid_location(self) -> None:
        with pytest.raises(TypeError, match="loc must be a list of keys and indices"):
            EmptyRunException("short", loc="dt")  # type: ignore
