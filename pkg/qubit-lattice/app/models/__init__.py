"""
domain 객체 (dataclass) + 실험 파라미터 (pydantic)
"""

from app.models.domain import (
    Qubit,
    SiteIndex,
    StepDelta,
    LatticeState,
    TimeSeriesRecord,
    PeriodEstimate,
    ChannelSummary,
    SweepRow,
    RunReport,
)
from app.models.params import (
    Variant,
    ThresholdMode,
    Boundary,
    Interior,
    Classification,
    Preset,
    ModelParams,
    InitPattern,
    ProbeSpec,
    AnalysisParams,
    ExperimentConfig,
)

__all__ = [
    "Qubit",
    "SiteIndex",
    "StepDelta",
    "LatticeState",
    "TimeSeriesRecord",
    "PeriodEstimate",
    "ChannelSummary",
    "SweepRow",
    "RunReport",
    "Variant",
    "ThresholdMode",
    "Boundary",
    "Interior",
    "Classification",
    "Preset",
    "ModelParams",
    "InitPattern",
    "ProbeSpec",
    "AnalysisParams",
    "ExperimentConfig",
]
