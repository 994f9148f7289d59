from .custom_base_model_schema import CustomBaseModel
from .eval_report_schema import EvalReport, MethodScore
from .exception_response_schema import DetailResponseSchema, ExceptionResponseSchema
from .run_config_schema import RunConfig
from .traffic_scenario_schema import CongestionEventSchema, PeakSchema, TrafficScenario

__all__ = [
    "CongestionEventSchema",
    "CustomBaseModel",
    "DetailResponseSchema",
    "EvalReport",
    "ExceptionResponseSchema",
    "MethodScore",
    "PeakSchema",
    "RunConfig",
    "TrafficScenario",
]
