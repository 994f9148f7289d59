import argparse
import json
from collections.abc import Callable, Sequence
from pathlib import Path

import numpy as np
import pandas as pd
from loguru import logger
from pydantic import ValidationError

from trendcast import __version__
from trendcast.common.schema import RunConfig
from trendcast.config import TrendcastSettings, get_settings
from trendcast.constants.defaults import LOG_LEVELS
from trendcast.evaluation import Evaluator
from trendcast.forecast import ForecastRunner
from trendcast.handlers import CliExceptionsHandler
from trendcast.series import SeriesCsvCodec
from trendcast.synth import TrafficGenerator
from trendcast.trend import MovingAverage
from trendcast.types import (
    EXIT_SUCCESS,
    EXIT_USAGE,
    ForecastMethod,
    ForecastParams,
    ForecastRun,
    Horizon,
    MeanKind,
    TimeSeries,
    TrendcastException,
)
from trendcast.types.series_exceptions import AcausalInputException, UsageException
from trendcast.utils import EnumUtils, FileUtils, LoggerUtils
from trendcast.volatility import VolatilityEstimator

logger = logger.bind(name=__name__)

HANDLED_ERRORS = (
    TrendcastException,
    ValidationError,
    FileNotFoundError,
    IsADirectoryError,
    PermissionError,
    json.JSONDecodeError,
)

# Flags whose argparse dest equals the RunConfig field and that default to None.
OPTIONAL_FIELDS = (
    "trend_window",
    "slope_window",
    "reference_window",
    "eps",
    "vol_forecast_window",
    "vol_forecast_horizon",
)


def load_series(config: RunConfig) -> TimeSeries:
    """The series named by ``config``; the pinned reference month when no source is given."""
    if config.input_path is not None:
        codec = SeriesCsvCodec(max_gap=config.max_gap)
        return codec.parse_file(config.input_path).series
    if config.scenario_path is not None:
        return TrafficGenerator(TrafficGenerator.load_scenario(config.scenario_path)).generate()

    logger.info("No input given, using the reference dataset")
    return TrafficGenerator.reference_dataset()


def horizons_in_samples(config: RunConfig, series: TimeSeries) -> list[Horizon]:
    horizons = []
    for minutes in config.horizons:
        if minutes % series.step_minutes:
            raise UsageException(
                f"Horizon of {minutes} min is not a whole number of "
                f"{series.step_minutes}-minute samples",
                loc=["horizons", minutes],
            )
        horizons.append(Horizon(minutes // series.step_minutes))
    return horizons


def forecast_params(config: RunConfig) -> ForecastParams:
    return ForecastParams(
        trend_window=config.trend_window, slope_window=config.slope_window, eps=config.eps
    )


def run_frame(run: ForecastRun, series: TimeSeries, trend_ref: TimeSeries | None) -> pd.DataFrame:
    """Rows for every issue index whose target lies inside ``series``, stamped at the target."""
    rows = run.targets <= series.end_index
    targets = run.targets[rows]

    reference = np.full(targets.size, np.nan)
    if trend_ref is not None:
        known = (targets >= trend_ref.offset) & (targets <= trend_ref.end_index)
        reference[known] = trend_ref.take(targets[known])

    return pd.DataFrame(
        {
            "t": SeriesCsvCodec.timestamps(series, targets),
            "actual": series.take(targets),
            "trend_ref": reference,
            "forecast": run.predicted[rows],
            "valid": run.valid[rows].astype(int),
        }
    )


def series_frame(series: TimeSeries, column: str) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "t": SeriesCsvCodec.timestamps(series, series.valid_range.indices()),
            column: series.values,
        }
    )


def cmd_synth(config: RunConfig, settings: TrendcastSettings) -> list[Path]:
    series = load_series(config)
    path = FileUtils.write_atomic(config.out_dir / "series.csv", SeriesCsvCodec.emit_csv(series))

    values = series.values
    print(
        f"length={len(series)} min={values.min():.6g} mean={values.mean():.6g} "
        f"max={values.max():.6g} std={values.std():.6g}"
    )
    return [path]


def cmd_forecast(config: RunConfig, settings: TrendcastSettings) -> list[Path]:
    series = load_series(config)
    runs = ForecastRunner.run_many(
        series,
        config.methods,
        horizons_in_samples(config, series),
        forecast_params(config),
        threads=settings.threads,
    )
    trend_ref = None
    if len(series) >= config.reference_window:
        trend_ref = MovingAverage.centered_mean(series, config.reference_window)

    paths = []
    for (method, delta_t), run in runs.items():
        name = f"forecast_{method.token}_dt{delta_t}.csv"
        text = SeriesCsvCodec.emit_frame_csv(run_frame(run, series, trend_ref))
        paths.append(FileUtils.write_atomic(config.out_dir / name, text))
        print(f"{name}: {run.valid_count} valid forecasts")
    return paths


def cmd_eval(config: RunConfig, settings: TrendcastSettings) -> list[Path]:
    series = load_series(config)
    reports = Evaluator.build_report(
        series,
        config.methods,
        horizons_in_samples(config, series),
        forecast_params(config),
        reference_window=config.reference_window,
        threads=settings.threads,
    )
    table = Evaluator.render_table(reports)
    paths = [
        FileUtils.write_atomic(config.out_dir / "report.json", Evaluator.reports_to_json(reports)),
        FileUtils.write_atomic(config.out_dir / "report.txt", table),
    ]
    print(table, end="")
    return paths


def cmd_volatility(config: RunConfig, settings: TrendcastSettings) -> list[Path]:
    mean_kind = config.mean or (MeanKind.CAUSAL if config.forecast else MeanKind.CENTERED)
    if config.forecast and mean_kind is MeanKind.CENTERED:
        raise AcausalInputException(
            "--forecast needs a causal mean; a centered volatility reads future samples",
            loc=["--mean", mean_kind.value],
        )

    series = load_series(config)
    scales = VolatilityEstimator.volatility_scales(
        series, config.vol_windows, mean_kind, threads=settings.threads
    )

    paths = []
    for n, vol in scales.items():
        trend = MovingAverage.mean(series, n, mean_kind)
        paths.append(
            FileUtils.write_atomic(
                config.out_dir / f"volatility_w{n}.csv",
                SeriesCsvCodec.emit_frame_csv(series_frame(vol.values, "volatility")),
            )
        )
        paths.append(
            FileUtils.write_atomic(
                config.out_dir / f"trend_w{n}.csv",
                SeriesCsvCodec.emit_frame_csv(series_frame(trend, "trend")),
            )
        )
        print(f"w={n}: mean volatility {vol.values.values.mean():.6g}")

    if config.forecast:
        n = config.vol_forecast_window
        vol = scales.get(n) or VolatilityEstimator.rolling_volatility(series, n, mean_kind)
        dt = Horizon(config.vol_forecast_horizon)
        run = VolatilityEstimator.forecast_volatility(vol, dt)
        frame = run_frame(run, vol.values, None).drop(columns="trend_ref")
        paths.append(
            FileUtils.write_atomic(
                config.out_dir / f"volatility_forecast_w{n}_dt{dt.delta_t}.csv",
                SeriesCsvCodec.emit_frame_csv(frame),
            )
        )
    return paths


COMMAND_CALLABLES: dict[str, Callable[[RunConfig, TrendcastSettings], list[Path]]] = {
    "synth": cmd_synth,
    "forecast": cmd_forecast,
    "eval": cmd_eval,
    "volatility": cmd_volatility,
}


def _add_source_flags(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--input", type=Path, help="timestamp,value CSV file")
    source.add_argument("--synth", type=Path, metavar="SCENARIO.json", help="scenario to generate")
    source.add_argument(
        "--reference", action="store_true", help="the pinned reference month (the default)"
    )
    parser.add_argument("--out", type=Path, default=Path(), help="output directory")
    parser.add_argument("--max-gap", type=int, help="longest interpolated gap, in samples")


def _add_forecast_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--methods", default="pe,al,mi", help="subset of pe,al,mi,raw")
    parser.add_argument("--horizons", default="5,15,60", help="lead times in minutes")
    parser.add_argument("--trend-window", type=int, help="causal trend window, samples")
    parser.add_argument("--slope-window", type=int, help="slope estimation window, samples")
    parser.add_argument("--reference-window", type=int, help="centered reference trend window")
    parser.add_argument("--eps", type=float, help="scaling-factor denominator guard, veh/min")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trendcast", description="Model-free short-term traffic flow forecasting."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        help="loguru level, overrides TRENDCAST_LOG_LEVEL",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    _add_source_flags(commands.add_parser("synth", help="write a synthetic series CSV"))

    forecast = commands.add_parser("forecast", help="write per-method forecast CSVs")
    _add_source_flags(forecast)
    _add_forecast_flags(forecast)

    evaluate = commands.add_parser("eval", help="score methods against the centered trend")
    _add_source_flags(evaluate)
    _add_forecast_flags(evaluate)

    volatility = commands.add_parser("volatility", help="rolling volatility at several scales")
    _add_source_flags(volatility)
    volatility.add_argument("--vol-windows", default="100,250,500", help="volatility windows")
    volatility.add_argument("--mean", choices=[kind.value for kind in MeanKind])
    volatility.add_argument("--forecast", action="store_true", help="also forecast volatility")
    volatility.add_argument("--vol-forecast-window", type=int)
    volatility.add_argument("--vol-forecast-horizon", type=int)
    return parser


def _int_list(value: str, flag: str) -> list[int]:
    try:
        return [int(token) for token in EnumUtils.split_tokens(value)]
    except ValueError as exc:
        raise UsageException(f"{flag} expects comma-separated integers", loc=[flag]) from exc


def build_config(args: argparse.Namespace, settings: TrendcastSettings) -> RunConfig:
    """Collect the flags of one command into a validated ``RunConfig``.

    Flags that were not given keep the ``RunConfig`` defaults.
    """
    fields: dict[str, object] = {
        "input_path": args.input,
        "scenario_path": args.synth,
        "use_reference": args.reference,
        "out_dir": args.out,
        "max_gap": settings.max_gap if args.max_gap is None else args.max_gap,
    }
    if "methods" in args:
        try:
            fields["methods"] = ForecastMethod.parse_list(args.methods)
        except ValueError as exc:
            raise UsageException(str(exc), loc=["--methods"]) from exc
        fields["horizons"] = _int_list(args.horizons, "--horizons")
    if "vol_windows" in args:
        fields["vol_windows"] = _int_list(args.vol_windows, "--vol-windows")
        fields["forecast"] = args.forecast
        fields["mean"] = args.mean

    for name in OPTIONAL_FIELDS:
        if getattr(args, name, None) is not None:
            fields[name] = getattr(args, name)
    return RunConfig(**fields)


def main(argv: Sequence[str] | None = None) -> int:
    """Run one ``trendcast`` command and return its exit code.

    0 on success, 1 when the data is too short for the request, 2 on usage or format errors.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    handler = CliExceptionsHandler(args.command)
    try:
        settings = get_settings()
        LoggerUtils.configure_logging((args.log_level or settings.log_level).upper())
        config = build_config(args, settings)
        COMMAND_CALLABLES[args.command](config, settings)
    except HANDLED_ERRORS as exc:
        return handler.handle(exc)
    return EXIT_SUCCESS
