from tests.fixtures.series.series_fixtures import (
    epoch_csv_text,
    gapped_csv_text,
    iso_csv_text,
    noisy_series,
    ramp_series,
    series_factory,
)

__all__ = [
    "epoch_csv_text",
    "gapped_csv_text",
    "iso_csv_text",
    "noisy_series",
    "ramp_series",
    "series_factory",
]
