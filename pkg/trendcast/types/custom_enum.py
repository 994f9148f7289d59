from enum import Enum
from typing import Self

from trendcast.utils.enum_utils import EnumUtils


class CustomEnum(Enum):
    @classmethod
    def object_name(cls) -> str:
        return EnumUtils.get_object_name(cls)

    @classmethod
    def from_token(cls, token: str) -> Self:
        return EnumUtils.lookup(cls, token)

    @classmethod
    def parse_list(cls, value: str) -> list[Self]:
        members: list[Self] = []
        for token in EnumUtils.split_tokens(value):
            member = cls.from_token(token)
            if member not in members:
                members.append(member)
        return members


class ForecastMethod(CustomEnum):
    PE = "Pe"
    AL = "Al"
    MI = "Mi"
    RAW_PERSISTENCE = "RawPersistence"

    @property
    def aliases(self) -> tuple[str, ...]:
        return ("raw",) if self is ForecastMethod.RAW_PERSISTENCE else ()

    @property
    def token(self) -> str:
        return "raw" if self is ForecastMethod.RAW_PERSISTENCE else self.value.lower()


class MeanKind(CustomEnum):
    CAUSAL = "causal"
    CENTERED = "centered"
