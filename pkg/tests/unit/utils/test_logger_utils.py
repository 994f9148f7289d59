import sys
from unittest.mock import patch

import pytest
from loguru import logger

from tests.fixtures.utils import log_levels, mock_record, mock_record_without_name
from trendcast.utils.logger_utils import LoggerUtils


@pytest.mark.describe("🧪  LoggerUtils")
class TestLoggerUtils:
    @pytest.mark.it("✅  Should send records to stderr at the requested level")
    def test_configure_logging_level(self) -> None:
        with patch.object(logger, "remove") as mock_remove, patch.object(logger, "add") as mock_add:
            LoggerUtils.configure_logging("DEBUG")

            mock_remove.assert_called_once()
            mock_add.assert_called_once_with(
                sys.stderr, level="DEBUG", format=LoggerUtils._formatter
            )

    @pytest.mark.it("✅  Should format log record correctly")
    def test_formatter(self, mock_record: dict) -> None:
        formatted = LoggerUtils._formatter(mock_record)  # type: ignore

        assert formatted == (
            "2024-03-20 10:30:45.123 - trendcast.forecast.runner - [<level>INFO</level>]: "
            "Scored 3 methods at t+15 on 41646 indices\n"
        )

    @pytest.mark.it("✅  Should use module name when name is not in extra")
    def test_formatter_without_name(self, mock_record_without_name: dict) -> None:
        formatted = LoggerUtils._formatter(mock_record_without_name)  # type: ignore

        assert formatted == (
            "2024-03-20 10:30:45.123 - csv_codec - [<level>WARNING</level>]: "
            "Interpolated 2 missing samples\n"
        )

    @pytest.mark.it("✅  Should handle different log levels")
    def test_formatter_different_levels(self, mock_record: dict, log_levels: list[str]) -> None:
        for level in log_levels:
            current_record = mock_record.copy()
            current_record["level"] = type("Level", (), {"name": level})

            formatted = LoggerUtils._formatter(current_record)  # type: ignore

            assert f"[<level>{level}</level>]" in formatted
