from pathlib import Path

from pydantic import Field, field_validator, model_validator

from trendcast.common.schema.custom_base_model_schema import CustomBaseModel
from trendcast.constants import defaults
from trendcast.types.custom_enum import ForecastMethod, MeanKind


class RunConfig(CustomBaseModel):
    """Parameters of one CLI invocation; defaults give the standard 5, 15 and 60 minute run."""

    input_path: Path | None = None
    scenario_path: Path | None = None
    use_reference: bool = False
    methods: list[ForecastMethod] = Field(
        default_factory=lambda: [ForecastMethod.PE, ForecastMethod.AL, ForecastMethod.MI]
    )
    horizons: list[int] = Field(default_factory=lambda: list(defaults.HORIZONS))
    trend_window: int = Field(default=defaults.TREND_WINDOW, ge=2)
    slope_window: int = Field(default=defaults.SLOPE_WINDOW, ge=2)
    reference_window: int = Field(default=defaults.REFERENCE_WINDOW, ge=2)
    vol_windows: list[int] = Field(default_factory=lambda: list(defaults.VOLATILITY_WINDOWS))
    vol_forecast_window: int = Field(default=defaults.VOLATILITY_FORECAST_WINDOW, ge=2)
    vol_forecast_horizon: int = Field(default=defaults.VOLATILITY_FORECAST_HORIZON, ge=1)
    eps: float = Field(default=defaults.SCALE_EPS, gt=0)
    out_dir: Path = Path()
    forecast: bool = False
    mean: MeanKind | None = None
    max_gap: int = Field(default=defaults.MAX_GAP_SAMPLES, ge=0)

    @field_validator("horizons")
    @classmethod
    def _positive_horizons(cls, value: list[int]) -> list[int]:
        if any(h < 1 for h in value):
            raise ValueError("horizons must be positive")
        return value

    @field_validator("vol_windows")
    @classmethod
    def _windows_at_least_two(cls, value: list[int]) -> list[int]:
        if any(n < 2 for n in value):
            raise ValueError("windows must be >= 2")
        return value

    @model_validator(mode="after")
    def _one_source(self) -> "RunConfig":
        sources = [self.input_path is not None, self.scenario_path is not None, self.use_reference]
        if sum(sources) > 1:
            raise ValueError("use only one of --input, --synth and --reference")
        return self
