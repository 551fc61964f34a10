"""
실험 실행 서비스
"""

from app.services.config_parser_service import parse_config
from app.services.experiment_service import run_experiment, run_sweep
from app.services.output_service import emit_timeseries_csv, read_timeseries_csv
from app.services.simulation_service import SimulationService
from app.services.sweep_service import sweep_periods

__all__ = [
    "parse_config",
    "run_experiment",
    "run_sweep",
    "emit_timeseries_csv",
    "read_timeseries_csv",
    "SimulationService",
    "sweep_periods",
]
