import io
import re
from dataclasses import dataclass
from datetime import datetime, timedelta
from pathlib import Path
from typing import TextIO

import numpy as np
import pandas as pd
from loguru import logger

from trendcast.constants import regex
from trendcast.constants.defaults import CSV_HEADER, EPOCH, ISO_MINUTE_FORMAT, MAX_GAP_SAMPLES
from trendcast.types.generic_types_var import IntArray
from trendcast.types.series_exceptions import (
    CsvParseException,
    GapTooLargeException,
    NonMonotoneTimestampException,
)
from trendcast.types.time_series import TimeSeries
from trendcast.utils.file_utils import FileUtils

# Data rows start on line 2, after the header.
FIRST_DATA_LINE = 2


@dataclass(slots=True, frozen=True)
class ParsedSeries:
    series: TimeSeries
    interpolated_count: int


class SeriesCsvCodec:
    """Reads and writes ``timestamp,value`` series files.

    Args:
        max_gap (int): Longest run of missing samples that is filled by linear interpolation.
        step_minutes (int | None): Grid step; inferred from the smallest timestamp difference
            when ``None``. A file with a single row has no difference to infer from and is read
            on a 1-minute grid unless the step is given here.
        unit_label (str): Unit attached to parsed series.

    """

    def __init__(
        self,
        max_gap: int = MAX_GAP_SAMPLES,
        step_minutes: int | None = None,
        unit_label: str = "veh/min",
    ) -> None:
        self.max_gap = max_gap
        self.step_minutes = step_minutes
        self.unit_label = unit_label
        self.logger = logger.bind(name=self.__class__.__module__)

    def parse_csv(self, text: str | TextIO) -> ParsedSeries:
        """Parse a series file onto a regular grid, filling short gaps.

        Args:
            text: CSV text or an open text stream.

        Returns:
            ParsedSeries: The series and the number of interpolated samples.

        Raises:
            CsvParseException: On a bad header, a malformed row or an off-grid timestamp.
            NonMonotoneTimestampException: When timestamps are not strictly increasing.
            GapTooLargeException: When a gap exceeds ``max_gap`` missing samples.

        """
        frame = self._read_frame(text)
        if frame.empty:
            raise CsvParseException("No data rows", loc=["line", FIRST_DATA_LINE])

        minutes = self._parse_timestamps(frame["timestamp"].tolist())
        values = self._parse_values(frame["value"].tolist())

        diffs = np.diff(minutes)
        bad = np.flatnonzero(diffs <= 0)
        if bad.size:
            line = int(bad[0]) + 1 + FIRST_DATA_LINE
            raise NonMonotoneTimestampException(
                f"Timestamp on line {line} does not follow the previous one",
                loc=["line", line],
            )

        step = self.step_minutes or (int(diffs.min()) if diffs.size else 1)
        off_grid = np.flatnonzero(diffs % step)
        if off_grid.size:
            line = int(off_grid[0]) + 1 + FIRST_DATA_LINE
            raise CsvParseException(
                f"Timestamp on line {line} is not on the {step}-minute grid", loc=["line", line]
            )

        missing = diffs // step - 1
        too_long = np.flatnonzero(missing > self.max_gap)
        if too_long.size:
            k = int(too_long[0])
            left, right = frame["timestamp"].iloc[k], frame["timestamp"].iloc[k + 1]
            raise GapTooLargeException(
                f"Gap of {int(missing[k])} samples between {left} and {right} exceeds the maximum "
                f"of {self.max_gap}",
                loc=[str(left).strip(), str(right).strip()],
            )

        grid_positions = (minutes - minutes[0]) // step
        grid = np.arange(int(grid_positions[-1]) + 1)
        filled = np.interp(grid, grid_positions, values)
        filled[grid_positions] = values

        interpolated = int(grid.size - grid_positions.size)
        if interpolated:
            self.logger.warning(f"Interpolated {interpolated} missing samples")

        series = TimeSeries(
            start_time=EPOCH + timedelta(minutes=int(minutes[0])),
            step_minutes=step,
            values=filled,
            unit_label=self.unit_label,
        )
        return ParsedSeries(series=series, interpolated_count=interpolated)

    def parse_file(self, path: Path) -> ParsedSeries:
        """Read a UTF-8 series file and parse it with :meth:`parse_csv`.

        Raises:
            CsvParseException: Also when the bytes are not valid UTF-8; ``loc`` names the line
                holding the first undecodable byte.

        """
        return self.parse_csv(self.decode(Path(path).read_bytes()))

    @staticmethod
    def decode(raw: bytes) -> str:
        try:
            return raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            line = raw.count(b"\n", 0, exc.start) + 1
            raise CsvParseException(
                f"Line {line} is not valid UTF-8: {exc.reason}", loc=["line", line]
            ) from exc

    @staticmethod
    def emit_csv(series: TimeSeries) -> str:
        """Render the valid range of ``series`` as ``timestamp,value`` CSV text.

        Values carry 17 significant digits, so parsing the output reproduces them bit for bit.
        """
        stamps = SeriesCsvCodec.timestamps(series, series.valid_range.indices())
        frame = pd.DataFrame({CSV_HEADER[0]: stamps, CSV_HEADER[1]: series.values})
        return SeriesCsvCodec.emit_frame_csv(frame)

    @staticmethod
    def emit_frame_csv(frame: pd.DataFrame) -> str:
        """Render a result table with the series float format; NaN cells are left empty."""
        return FileUtils.frame_to_csv(frame)

    @staticmethod
    def timestamps(series: TimeSeries, indices: IntArray) -> list[str]:
        """ISO minute timestamps of grid ``indices``."""
        offsets = pd.to_timedelta(np.asarray(indices, dtype=np.int64) * series.step_minutes, unit="min")
        return list((pd.Timestamp(series.start_time) + offsets).strftime(ISO_MINUTE_FORMAT))

    @staticmethod
    def _read_frame(text: str | TextIO) -> pd.DataFrame:
        source = io.StringIO(text) if isinstance(text, str) else text
        try:
            frame = pd.read_csv(
                source,
                dtype=str,
                keep_default_na=False,
                skip_blank_lines=True,
                engine="python",
            )
        except pd.errors.EmptyDataError as exc:
            raise CsvParseException("Missing header 'timestamp,value'", loc=["line", 1]) from exc
        except pd.errors.ParserError as exc:
            found = re.search(regex.PARSER_LINE, str(exc))
            line = int(found.group(1)) if found else 0
            raise CsvParseException(f"Malformed row: {exc}", loc=["line", line]) from exc

        if tuple(column.strip() for column in frame.columns) != CSV_HEADER:
            raise CsvParseException(
                f"Header must be '{','.join(CSV_HEADER)}', got '{','.join(frame.columns)}'",
                loc=["line", 1],
            )
        frame.columns = list(CSV_HEADER)
        return frame

    @staticmethod
    def _parse_timestamps(raw: list[str]) -> np.ndarray:
        first = raw[0].strip()
        iso = re.match(regex.ISO_MINUTE, first) is not None
        pattern = regex.ISO_MINUTE if iso else regex.EPOCH_MINUTES

        minutes = np.empty(len(raw), dtype=np.int64)
        for k, stamp in enumerate(raw):
            line = k + FIRST_DATA_LINE
            stamp = stamp.strip()
            if re.match(pattern, stamp) is None:
                raise CsvParseException(
                    f"Bad timestamp '{stamp}' on line {line}", loc=["line", line]
                )
            if iso:
                try:
                    moment = datetime.strptime(stamp, ISO_MINUTE_FORMAT)
                except ValueError as exc:
                    raise CsvParseException(
                        f"Bad timestamp '{stamp}' on line {line}", loc=["line", line]
                    ) from exc
                minutes[k] = (moment - EPOCH) // timedelta(minutes=1)
            else:
                minutes[k] = int(stamp)
        return minutes

    @staticmethod
    def _parse_values(raw: list[str]) -> np.ndarray:
        values = np.empty(len(raw), dtype=np.float64)
        for k, text in enumerate(raw):
            line = k + FIRST_DATA_LINE
            if not isinstance(text, str):
                raise CsvParseException(f"Missing value on line {line}", loc=["line", line])
            try:
                value = float(text)
            except ValueError as exc:
                raise CsvParseException(
                    f"Bad value '{text}' on line {line}", loc=["line", line]
                ) from exc
            if not np.isfinite(value):
                raise CsvParseException(
                    f"Non-finite value '{text}' on line {line}", loc=["line", line]
                )
            values[k] = value
        return values
