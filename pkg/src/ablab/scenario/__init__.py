from .loader import bundled_scenarios, dump_scenario, load_scenario, parse_scenario
from .schema import BeamSpec, CoilSpec, LoopSpec, NumericsSpec, OutputSpec, RingSpec, Scenario
from .writer import CsvWriter, field_grid_csv, fringe_csv

__all__ = [
    "Scenario",
    "LoopSpec",
    "CoilSpec",
    "RingSpec",
    "BeamSpec",
    "NumericsSpec",
    "OutputSpec",
    "load_scenario",
    "parse_scenario",
    "dump_scenario",
    "bundled_scenarios",
    "CsvWriter",
    "field_grid_csv",
    "fringe_csv",
]
