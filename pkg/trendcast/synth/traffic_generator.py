from datetime import datetime
from pathlib import Path

import numpy as np
from loguru import logger
from scipy.signal import lfilter

from trendcast.common.schema.traffic_scenario_schema import (
    CongestionEventSchema,
    PeakSchema,
    TrafficScenario,
)
from trendcast.constants.defaults import MINUTES_PER_DAY
from trendcast.types.generic_types_var import FloatArray
from trendcast.types.series_exceptions import ScenarioException
from trendcast.types.time_series import TimeSeries

HALF_DAY = MINUTES_PER_DAY // 2

REFERENCE_SEED = 20140601


class TrafficGenerator:
    """Seeded one-minute traffic flow built from a daily profile, correlated noise and incidents.

    ``flow = max(0, (base + peaks + noise) * dips)`` where

    * ``peaks`` are Gaussian bumps on the circular minute-of-day axis, ``width_minutes`` being the
      standard deviation; each day may shift a peak's centre and scale its amplitude,
    * ``noise`` is a stationary AR(1) process with marginal std ``noise_std``,
    * ``dips`` multiply the flow by ``1 - depth`` over each congestion event.

    Random draws come from ``numpy.random.Generator(PCG64(seed))`` in a fixed order: centre
    shifts, amplitude multipliers, then one noise innovation per sample. The same scenario
    always produces the same bits.
    """

    def __init__(self, scenario: TrafficScenario) -> None:
        self.scenario = scenario
        self.logger = logger.bind(name=self.__class__.__module__)

    def generate(self) -> TimeSeries:
        scenario = self.scenario
        self._check_events()
        rng = np.random.Generator(np.random.PCG64(scenario.seed))

        n_peaks = len(scenario.peaks)
        shifts = rng.standard_normal((scenario.days, n_peaks)) * scenario.peak_time_jitter_minutes
        multipliers = rng.standard_normal((scenario.days, n_peaks)) * scenario.amplitude_jitter + 1.0
        innovations = rng.standard_normal(scenario.length)

        flow = scenario.base_flow + self._profile(shifts, multipliers) + self._noise(innovations)
        flow *= self._dips()
        np.maximum(flow, 0.0, out=flow)

        self.logger.debug(
            f"Generated {scenario.length} samples from seed {scenario.seed}, "
            f"mean {flow.mean():.3f} veh/min"
        )
        return TimeSeries(start_time=scenario.start_time, step_minutes=1, values=flow)

    def _profile(self, shifts: FloatArray, multipliers: FloatArray) -> FloatArray:
        scenario = self.scenario
        if not scenario.peaks:
            return np.zeros(scenario.length)

        start = scenario.start_time
        first_minute = start.hour * 60 + start.minute
        minute_of_day = (first_minute + np.arange(MINUTES_PER_DAY)) % MINUTES_PER_DAY
        centers = np.array([peak.center_minute for peak in scenario.peaks]) + shifts
        widths = np.array([peak.width_minutes for peak in scenario.peaks])
        amplitudes = np.array([peak.amplitude for peak in scenario.peaks]) * multipliers

        # (day, peak, minute); distance wraps around midnight
        distance = (minute_of_day - centers[:, :, None] + HALF_DAY) % MINUTES_PER_DAY - HALF_DAY
        bumps = amplitudes[:, :, None] * np.exp(-0.5 * (distance / widths[None, :, None]) ** 2)
        return bumps.sum(axis=1).reshape(-1)

    def _noise(self, innovations: FloatArray) -> FloatArray:
        phi = self.scenario.noise_ar1
        gain = np.sqrt(1.0 - phi * phi) * self.scenario.noise_std
        # first sample drawn from the stationary distribution
        innovations[0] /= np.sqrt(1.0 - phi * phi)
        return lfilter([gain], [1.0, -phi], innovations)

    def _dips(self) -> FloatArray:
        factor = np.ones(self.scenario.length)
        for event in self.scenario.congestion_events:
            factor[event.start_index : event.start_index + event.duration] *= 1.0 - event.depth
        return factor

    def _check_events(self) -> None:
        for k, event in enumerate(self.scenario.congestion_events):
            if event.start_index >= self.scenario.length:
                raise ScenarioException(
                    f"Congestion event starts at {event.start_index}, after the last sample "
                    f"{self.scenario.length - 1}",
                    loc=["congestion_events", k, "start_index"],
                )

    @staticmethod
    def reference_scenario() -> TrafficScenario:
        """The pinned month every acceptance number is computed on."""
        return TrafficScenario(
            days=30,
            seed=REFERENCE_SEED,
            base_flow=8.0,
            peaks=[
                PeakSchema(center_minute=480, width_minutes=60, amplitude=25),
                PeakSchema(center_minute=1050, width_minutes=75, amplitude=30),
            ],
            noise_std=3.0,
            noise_ar1=0.6,
            congestion_events=[
                CongestionEventSchema(
                    start_index=11 * MINUTES_PER_DAY + 455, duration=50, depth=0.6
                ),
                CongestionEventSchema(
                    start_index=22 * MINUTES_PER_DAY + 1020, duration=70, depth=0.45
                ),
            ],
            peak_time_jitter_minutes=20.0,
            amplitude_jitter=0.15,
            start_time=datetime(2014, 6, 1),
        )

    @staticmethod
    def reference_dataset() -> TimeSeries:
        return TrafficGenerator(TrafficGenerator.reference_scenario()).generate()

    @staticmethod
    def load_scenario(path: Path) -> TrafficScenario:
        """Read a scenario JSON file.

        Raises:
            FileNotFoundError: If ``path`` does not exist.
            pydantic.ValidationError: If a field is missing or out of range.

        """
        return TrafficScenario.model_validate_json(Path(path).read_text(encoding="utf-8"))
