from tests.fixtures.cli.cli_fixtures import (
    constant_csv,
    malformed_csv,
    out_dir,
    scenario_file,
    short_csv,
    undecodable_csv,
    write_series_csv,
)

__all__ = [
    "constant_csv",
    "malformed_csv",
    "out_dir",
    "scenario_file",
    "short_csv",
    "undecodable_csv",
    "write_series_csv",
]
