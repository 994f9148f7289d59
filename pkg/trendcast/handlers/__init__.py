from .cli_exceptions_handler import CliExceptionsHandler

__all__ = ["CliExceptionsHandler"]
