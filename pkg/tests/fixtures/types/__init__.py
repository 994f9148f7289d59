from tests.fixtures.types.custom_base_exception_fixtures import (
    basic_exception_data,
    empty_message_data,
    full_exception_data,
)

__all__ = ["basic_exception_data", "empty_message_data", "full_exception_data"]
