from pydantic import BaseModel, ConfigDict


class CustomBaseModel(BaseModel):
    """A custom base model that extends Pydantic's BaseModel.

    Models are immutable, reject unknown keys and serialize non-finite floats as the strings
    ``"Infinity"``/``"NaN"`` so JSON output stays standard-conforming.
    """

    model_config = ConfigDict(frozen=True, extra="forbid", ser_json_inf_nan="strings")
