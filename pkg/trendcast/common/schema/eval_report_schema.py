from pydantic import Field

from trendcast.common.schema.custom_base_model_schema import CustomBaseModel


class MethodScore(CustomBaseModel):
    sse: float = Field(ge=0)
    gain_percent: float | None = None


class EvalReport(CustomBaseModel):
    """Squared errors of each method at one horizon, scored on one shared index set.

    Attributes:
        horizon_minutes (int): Lead time of the forecasts.
        reference_window (int): Window of the centered trend the errors are measured against.
        valid_count (int): Number of jointly valid issue indices.
        valid_range (tuple[int, int]): First and last jointly valid issue index.
        methods (dict[str, MethodScore]): Per-method SSE and, when Pe was scored, the gain over Pe.
        note (str | None): Set when gains are omitted.

    """

    horizon_minutes: int = Field(ge=1)
    reference_window: int = Field(ge=2)
    valid_count: int = Field(ge=1)
    valid_range: tuple[int, int]
    methods: dict[str, MethodScore]
    note: str | None = None
