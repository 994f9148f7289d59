EXIT_SUCCESS = 0
EXIT_DATA_INSUFFICIENT = 1
EXIT_USAGE = 2


class TrendcastException(Exception):
    exit_code: int = EXIT_USAGE

    def __init__(self, msg: str, loc: list[str | int] | None = None, _type: str | None = None) -> None:
        if not isinstance(msg, str):
            raise TypeError("msg must be a string")
        if loc is not None and not isinstance(loc, list):
            raise TypeError("loc must be a list of keys and indices")
        if _type is not None and not isinstance(_type, str):
            raise TypeError("type must be a string")

        super().__init__(msg)
        self.msg = msg
        self.loc = loc
        self.type = _type
