from .base_settings_utils import TomlBaseSettings
from .enum_utils import EnumUtils
from .file_utils import FileUtils
from .json_utils import JsonUtils
from .logger_utils import LoggerUtils

__all__ = ["EnumUtils", "FileUtils", "JsonUtils", "LoggerUtils", "TomlBaseSettings"]
