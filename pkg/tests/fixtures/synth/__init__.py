from tests.fixtures.synth.scenario_fixtures import (
    periodic_scenario,
    periodic_series,
    reference_series,
    scenario_payload,
)

__all__ = ["periodic_scenario", "periodic_series", "reference_series", "scenario_payload"]
