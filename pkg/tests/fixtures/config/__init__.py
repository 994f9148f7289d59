from tests.fixtures.config.settings_fixtures import (
    clean_env,
    config_dir_with_base_file,
    config_dir_with_local_override,
    settings_sources,
    temp_config_dir,
)

__all__ = [
    "clean_env",
    "config_dir_with_base_file",
    "config_dir_with_local_override",
    "settings_sources",
    "temp_config_dir",
]
