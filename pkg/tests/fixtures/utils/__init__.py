from tests.fixtures.utils.logger_fixtures import log_levels, mock_record, mock_record_without_name

__all__ = ["log_levels", "mock_record", "mock_record_without_name"]
