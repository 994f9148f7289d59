from datetime import datetime

from pydantic import Field, field_validator

from trendcast.common.schema.custom_base_model_schema import CustomBaseModel
from trendcast.constants.defaults import MINUTES_PER_DAY


class PeakSchema(CustomBaseModel):
    """Daily Gaussian bump on the minute-of-day axis."""

    center_minute: float = Field(ge=0, lt=MINUTES_PER_DAY)
    width_minutes: float = Field(gt=0)
    amplitude: float


class CongestionEventSchema(CustomBaseModel):
    """Multiplicative dip of ``depth`` over ``[start_index, start_index + duration)``."""

    start_index: int = Field(ge=0)
    duration: int = Field(ge=1)
    depth: float = Field(gt=0, le=1)


class TrafficScenario(CustomBaseModel):
    days: int = Field(ge=1)
    seed: int = Field(ge=0, lt=2**64)
    base_flow: float = Field(ge=0)
    peaks: list[PeakSchema] = Field(default_factory=list)
    noise_std: float = Field(default=0.0, ge=0)
    noise_ar1: float = Field(default=0.0, ge=0, lt=1)
    congestion_events: list[CongestionEventSchema] = Field(default_factory=list)
    peak_time_jitter_minutes: float = Field(default=0.0, ge=0)
    amplitude_jitter: float = Field(default=0.0, ge=0)
    start_time: datetime = datetime(2014, 6, 1)

    @field_validator("start_time")
    @classmethod
    def _minute_resolution(cls, value: datetime) -> datetime:
        if value.tzinfo is not None or value.second or value.microsecond:
            raise ValueError("start_time must be a naive timestamp at minute resolution")
        return value

    @property
    def length(self) -> int:
        return self.days * MINUTES_PER_DAY

    @property
    def is_periodic(self) -> bool:
        return (
            self.noise_std == 0
            and not self.congestion_events
            and self.peak_time_jitter_minutes == 0
            and self.amplitude_jitter == 0
        )
