import json

from loguru import logger
from pydantic import ValidationError

from trendcast.common.schema import DetailResponseSchema, ExceptionResponseSchema
from trendcast.types.custom_base_exception import EXIT_USAGE, TrendcastException
from trendcast.utils import JsonUtils


class CliExceptionsHandler:
    """Turns the errors a command can raise into an exit code and one structured log record."""

    def __init__(self, command: str) -> None:
        self.command = command
        self.logger = logger.bind(name=self.__class__.__module__)

    def handle(self, exc: BaseException) -> int:
        """Log ``exc`` and return the process exit code.

        Args:
            exc (BaseException): The exception that ended the command.

        Returns:
            int: 1 for data insufficiency, 2 for usage or format errors.

        Raises:
            BaseException: ``exc`` itself when it is not a known command error.

        """
        response = self.error_response(exc)
        if response is None:
            raise exc

        self.logger.error(
            json.dumps(response.model_dump(), default=JsonUtils.json_serial, ensure_ascii=False)
        )
        return response.exit_code

    def error_response(self, exc: BaseException) -> ExceptionResponseSchema | None:
        if isinstance(exc, TrendcastException):
            detail = DetailResponseSchema(loc=exc.loc or [], msg=exc.msg, type=exc.type or "")
            return self.global_exception_error_message(exc.exit_code, detail)

        if isinstance(exc, ValidationError):
            detail = [
                DetailResponseSchema(loc=list(error["loc"]), msg=error["msg"], type=error["type"])
                for error in exc.errors()
            ]
            return self.global_exception_error_message(EXIT_USAGE, detail)

        if isinstance(exc, FileNotFoundError | IsADirectoryError | PermissionError):
            detail = DetailResponseSchema(
                loc=[str(exc.filename or "")], msg=exc.strerror or str(exc), type="File Error"
            )
            return self.global_exception_error_message(EXIT_USAGE, detail)

        if isinstance(exc, json.JSONDecodeError):
            detail = DetailResponseSchema(
                loc=["line", exc.lineno], msg=exc.msg, type="JSON Decode Error"
            )
            return self.global_exception_error_message(EXIT_USAGE, detail)

        return None

    def global_exception_error_message(
        self, exit_code: int, detail: DetailResponseSchema | list[DetailResponseSchema]
    ) -> ExceptionResponseSchema:
        if not isinstance(detail, list):
            detail = [detail]

        return ExceptionResponseSchema(detail=detail, exit_code=exit_code, command=self.command)
