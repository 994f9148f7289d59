import json
import math
from datetime import date, datetime
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np


class JsonUtils:
    @staticmethod
    def json_serial(obj: object) -> Any:
        """JSON serializer for objects not serializable by default json code.

        Args:
            obj: A datetime/date, an Enum member, a Path, or a numpy scalar/array.

        Returns:
            str | int | float | list: A JSON-compatible representation.

        Raises:
            TypeError: If the object type is not serializable.

        """
        if isinstance(obj, datetime | date):
            return obj.isoformat()
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, Path):
            return obj.as_posix()
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return JsonUtils.finite_or_label(float(obj))
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        raise TypeError(f"Type {type(obj)} not serializable")

    @staticmethod
    def finite_or_label(value: float) -> float | str:
        if math.isnan(value):
            return "NaN"
        if math.isinf(value):
            return "Infinity" if value > 0 else "-Infinity"
        return value

    @staticmethod
    def dumps(payload: Any) -> str:
        """Deterministic, pretty JSON text terminated by a newline."""
        return (
            json.dumps(payload, default=JsonUtils.json_serial, indent=2, sort_keys=False, allow_nan=False)
            + "\n"
        )
