import json
import math
from collections.abc import Sequence

import numpy as np
from loguru import logger

from trendcast.common.schema.eval_report_schema import EvalReport, MethodScore
from trendcast.constants.defaults import REFERENCE_WINDOW
from trendcast.forecast.runner import ForecastRunner
from trendcast.trend.moving_average import MovingAverage
from trendcast.types.custom_enum import ForecastMethod
from trendcast.types.forecast_run import ForecastParams, ForecastRun, Horizon
from trendcast.types.generic_types_var import BoolArray
from trendcast.types.series_exceptions import EmptyMaskException, InvalidMetricException
from trendcast.types.time_series import TimeSeries
from trendcast.utils.json_utils import JsonUtils

logger = logger.bind(name=__name__)

GAINS_OMITTED_NOTE = "Gains omitted: Pe was not among the scored methods"


class Evaluator:
    """Scores forecast runs against the centered trend at the target time ``i + dt``."""

    @staticmethod
    def joint_mask(runs: Sequence[ForecastRun], reference: TimeSeries) -> BoolArray:
        """Issue indices valid in every run whose target lies in the reference's valid range.

        All runs must come from the same series, so they share ``issued_at``.
        """
        first = runs[0]
        targets = first.targets
        mask = (targets >= reference.offset) & (targets <= reference.end_index)
        for run in runs:
            if not np.array_equal(run.issued_at, first.issued_at):
                raise InvalidMetricException(
                    f"{run.method.value} was issued on a different index set than "
                    f"{first.method.value}",
                    loc=["runs", run.method.value],
                )
            mask &= run.valid
        return mask

    @staticmethod
    def sse_vs_trend(run: ForecastRun, reference: TimeSeries, mask: BoolArray) -> float:
        """``sum((predicted[i] - reference[i + dt]) ** 2)`` over the issue indices in ``mask``.

        Raises:
            EmptyMaskException: If ``mask`` selects nothing.
            InvalidMetricException: If ``mask`` selects an invalid forecast or a target outside
                the reference.

        """
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != run.valid.shape:
            raise InvalidMetricException(
                f"Mask has shape {mask.shape}, the run has {run.valid.shape}", loc=["mask"]
            )
        if not mask.any():
            raise EmptyMaskException(
                f"No jointly valid index for {run.method.value} at horizon "
                f"{run.horizon.delta_t}",
                loc=["mask", run.horizon.delta_t],
            )
        if np.any(mask & ~run.valid):
            raise InvalidMetricException(
                f"Mask selects issue indices where {run.method.value} is not valid",
                loc=["mask", int(run.issued_at[np.argmax(mask & ~run.valid)])],
            )
        targets = run.targets[mask]
        if targets.min() < reference.offset or targets.max() > reference.end_index:
            raise InvalidMetricException(
                f"Mask selects targets outside the reference range {reference.valid_range}",
                loc=["mask", "reference"],
            )
        errors = run.predicted[mask] - reference.take(targets)
        return float(np.dot(errors, errors))

    @staticmethod
    def gain_percent(sse_pe: float, sse_method: float) -> float:
        """``(sse_pe / sse_method - 1) * 100``.

        A method with zero error against a non-zero Pe error has infinite gain and returns
        ``math.inf``.

        Raises:
            InvalidMetricException: If either SSE is negative or NaN.

        """
        for name, value in (("sse_pe", sse_pe), ("sse_method", sse_method)):
            if not value >= 0:
                raise InvalidMetricException(f"{name} must be >= 0, got {value}", loc=[name])
        if sse_method == 0:
            return 0.0 if sse_pe == 0 else math.inf
        return (sse_pe / sse_method - 1.0) * 100.0

    @staticmethod
    def build_report(
        series: TimeSeries,
        methods: Sequence[ForecastMethod],
        horizons: Sequence[Horizon],
        params: ForecastParams = ForecastParams(),
        reference_window: int = REFERENCE_WINDOW,
        threads: int | None = None,
    ) -> list[EvalReport]:
        """One report per horizon, every method scored on the same masked index set.

        Gains are relative to Pe and are only reported when Pe is among ``methods``.

        Raises:
            EmptyRunException: If a method has no valid issue index.
            EmptyMaskException: If the methods share no valid index at some horizon.

        """
        if not horizons or not methods:
            return []

        reference = MovingAverage.centered_mean(series, reference_window)
        runs = ForecastRunner.run_many(series, methods, horizons, params, threads)

        reports = []
        for horizon in horizons:
            horizon_runs = [runs[(method, horizon.delta_t)] for method in methods]
            mask = Evaluator.joint_mask(horizon_runs, reference)
            scored = {
                run.method: Evaluator.sse_vs_trend(run, reference, mask) for run in horizon_runs
            }

            sse_pe = scored.get(ForecastMethod.PE)
            scores = {
                method.value: MethodScore(
                    sse=sse,
                    gain_percent=None
                    if sse_pe is None or method is ForecastMethod.PE
                    else Evaluator.gain_percent(sse_pe, sse),
                )
                for method, sse in scored.items()
            }
            issued = horizon_runs[0].issued_at[mask]
            reports.append(
                EvalReport(
                    horizon_minutes=horizon.minutes(series.step_minutes),
                    reference_window=reference_window,
                    valid_count=int(issued.size),
                    valid_range=(int(issued[0]), int(issued[-1])),
                    methods=scores,
                    note=None if sse_pe is not None else GAINS_OMITTED_NOTE,
                )
            )
            logger.info(
                f"Scored {len(scores)} methods at t+{horizon.delta_t} on {issued.size} indices"
            )
        return reports

    @staticmethod
    def render_table(reports: Sequence[EvalReport]) -> str:
        """Aligned text table: one row per horizon, SSE per method with the gain in brackets."""
        if not reports:
            return "No horizons evaluated\n"

        methods = list(reports[0].methods)
        header = ["Horizon"] + [
            name if reports[0].methods[name].gain_percent is None else f"{name} [gain in %]"
            for name in methods
        ]
        rows = [header]
        for report in reports:
            row = [f"t+{report.horizon_minutes}min"]
            for name in methods:
                score = report.methods[name]
                cell = f"{score.sse:.3g}"
                if score.gain_percent is not None:
                    gain = "inf" if math.isinf(score.gain_percent) else f"{score.gain_percent:.0f}"
                    cell = f"{cell} [{gain}%]"
                row.append(cell)
            rows.append(row)

        widths = [max(len(row[k]) for row in rows) for k in range(len(header))]
        lines = [
            "  ".join(cell.ljust(width) for cell, width in zip(row, widths, strict=True)).rstrip()
            for row in rows
        ]
        notes = sorted({report.note for report in reports if report.note})
        return "\n".join(lines + notes) + "\n"

    @staticmethod
    def reports_to_json(reports: Sequence[EvalReport]) -> str:
        return JsonUtils.dumps(
            [json.loads(report.model_dump_json(exclude_none=True)) for report in reports]
        )
