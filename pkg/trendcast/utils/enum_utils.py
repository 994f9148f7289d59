import re
from enum import Enum


class EnumUtils:
    @staticmethod
    def camel_to_snake(name: str) -> str:
        name = re.sub("(.)([A-Z][a-z]+)", r"\1_\2", name)
        return re.sub("([a-z0-9])([A-Z])", r"\1_\2", name).lower()

    @staticmethod
    def get_object_name(enum_cls: type) -> str:
        return EnumUtils.camel_to_snake(enum_cls.__name__)

    @staticmethod
    def split_tokens(value: str) -> list[str]:
        """Split a comma-separated CLI list, dropping blanks and surrounding spaces."""
        return [token.strip() for token in value.split(",") if token.strip()]

    @staticmethod
    def lookup(enum_cls: type[Enum], token: str) -> Enum:
        """Find an enum member by value, name or snake-cased name, ignoring case.

        Args:
            enum_cls: The enum to search.
            token: The user supplied token, e.g. ``"mi"``, ``"Mi"`` or ``"raw_persistence"``.

        Returns:
            Enum: The matching member.

        Raises:
            ValueError: If no member matches.

        """
        wanted = token.strip().lower()
        for member in enum_cls:
            aliases = {
                str(member.value).lower(),
                member.name.lower(),
                EnumUtils.camel_to_snake(str(member.value)),
                *getattr(member, "aliases", ()),
            }
            if wanted in aliases:
                return member
        choices = ", ".join(str(member.value) for member in enum_cls)
        raise ValueError(f"'{token}' is not a valid {EnumUtils.get_object_name(enum_cls)} ({choices})")
