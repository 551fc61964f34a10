"""
실험 파라미터 pydantic 모델

설정 파일 스키마와 1:1 대응 => 섹션.필드 (model.epsilon, init.boundary, ...)
"""

from enum import Enum
from typing import Any, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.config import (
    DEFAULT_EPSILON_GRID,
    DEFAULT_PROBE_PAIR,
    DEFAULT_PROBE_SITE,
    MIN_LATTICE_SIZE,
    NORMALIZATION_TOLERANCE,
    REFERENCE_LATTICE_SIZE,
    REFERENCE_STEPS,
    settings,
)


class Variant(str, Enum):
    NO_THRESHOLD = "NoThreshold"  # model A: AND 게이트가 천천히 ground로 당김
    THRESHOLD = "Threshold"  # model B: threshold 도달 시 즉시 collapse


class ThresholdMode(str, Enum):
    MAGNITUDE = "Magnitude"  # |c| >= c_thres
    SIGNED = "Signed"  # c >= c_thres


class Boundary(str, Enum):
    ALL_FOUR_SIDES = "AllFourSides"
    TWO_OPPOSITE_SIDES_X = "TwoOppositeSidesX"  # y = 0, y = H-1 두 행
    TWO_OPPOSITE_SIDES_Y = "TwoOppositeSidesY"  # x = 0, x = W-1 두 열
    NONE = "None"


class Interior(str, Enum):
    ALL_GROUND = "AllGround"
    RANDOM_UNIT_CIRCLE = "RandomUnitCircle"


class Classification(str, Enum):
    STATIC = "Static"
    PERIODIC = "Periodic"
    APERIODIC = "Aperiodic"
    UNDETERMINED = "Undetermined"


class Preset(str, Enum):
    FIG1 = "Fig1"
    FIG2 = "Fig2"
    FIG3 = "Fig3"
    FIG4 = "Fig4"
    FIG5 = "Fig5"
    FIG6 = "Fig6"


Coord = Tuple[int, int]


def _split_list(value: Any, sep: str) -> Any:
    """'a; b' 형태 문자열을 리스트로 변환 (이미 리스트면 그대로)"""
    if isinstance(value, str):
        return [part.strip() for part in value.split(sep) if part.strip()]
    return value


def _parse_coord(value: Any) -> Any:
    if isinstance(value, str):
        parts = [p.strip() for p in value.split(",")]
        if len(parts) != 2:
            raise ValueError(f"좌표는 'x,y' 형식이어야 합니다: '{value}'")
        return (int(parts[0]), int(parts[1]))
    return value


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, use_enum_values=False)


class ModelParams(_Section):
    epsilon: float = Field(..., gt=0, description="c-NOT 결합 가중치")
    variant: Variant
    c_thres: float = Field(default=0.7, gt=0, le=1)
    # None => epsilon과 동일하게 적용
    decay_weight: Optional[float] = Field(default=None, ge=0)
    threshold_mode: ThresholdMode = ThresholdMode.MAGNITUDE
    # AND 게이트를 몇 step마다 적용할지 (model A 전용)
    decay_every: int = Field(default=1, ge=1)

    @property
    def effective_decay_weight(self) -> float:
        return self.epsilon if self.decay_weight is None else self.decay_weight

    @property
    def is_threshold(self) -> bool:
        return self.variant == Variant.THRESHOLD


class InitPattern(_Section):
    boundary: Boundary = Boundary.ALL_FOUR_SIDES
    interior: Interior = Interior.ALL_GROUND
    excited_value: Tuple[float, float] = (1.0, 0.0)
    seed: int = Field(default=0, ge=0, lt=2**64)

    @field_validator("excited_value", mode="before")
    @classmethod
    def _parse_excited(cls, value: Any) -> Any:
        if isinstance(value, str):
            parts = [p.strip() for p in value.split(",")]
            return tuple(float(p) for p in parts)
        return value

    @field_validator("excited_value")
    @classmethod
    def _check_normalized(cls, value: Tuple[float, float]) -> Tuple[float, float]:
        c, s = value
        if abs(c * c + s * s - 1.0) >= NORMALIZATION_TOLERANCE:
            raise ValueError(f"excited_value {value}가 정규화되어 있지 않습니다")
        return value


class ProbeSpec(_Section):
    single_sites: List[Coord] = Field(default_factory=lambda: [DEFAULT_PROBE_SITE])
    pairs: List[Tuple[Coord, Coord]] = Field(
        default_factory=lambda: [DEFAULT_PROBE_PAIR]
    )
    record_sum: bool = True
    record_mean: bool = False
    record_s: bool = False
    sample_stride: int = Field(default=1, ge=1)

    @field_validator("single_sites", mode="before")
    @classmethod
    def _parse_sites(cls, value: Any) -> Any:
        value = _split_list(value, ";")
        if isinstance(value, list):
            return [_parse_coord(v) for v in value]
        return value

    @field_validator("pairs", mode="before")
    @classmethod
    def _parse_pairs(cls, value: Any) -> Any:
        value = _split_list(value, ";")
        if isinstance(value, list):
            pairs = []
            for item in value:
                if isinstance(item, str):
                    left, _, right = item.partition("|")
                    if not right:
                        raise ValueError(f"pair는 'x1,y1|x2,y2' 형식이어야 합니다: '{item}'")
                    item = (_parse_coord(left), _parse_coord(right))
                pairs.append(item)
            return pairs
        return value

    @model_validator(mode="after")
    def _non_negative(self) -> "ProbeSpec":
        for x, y in self.all_sites():
            if x < 0 or y < 0:
                raise ValueError(f"probe 좌표는 음수일 수 없습니다: ({x}, {y})")
        return self

    def all_sites(self) -> List[Coord]:
        sites = list(self.single_sites)
        for left, right in self.pairs:
            sites.extend([left, right])
        return sites


class AnalysisParams(_Section):
    transient_fraction: float = Field(default=0.25, ge=0, lt=1)
    static_tolerance: float = Field(default=1e-6, gt=0)
    periodic_cv_max: float = Field(default=0.05, ge=0)
    aperiodic_cv_min: float = Field(default=0.15, ge=0)
    peak_prominence_sigma: float = Field(default=0.5)
    # peak 최소 간격 = refractory_fraction * 지배적 autocorrelation lag
    refractory_fraction: float = Field(default=0.6, gt=0, lt=1)
    min_peaks: int = Field(default=5, ge=2)
    # 마지막 N개 샘플만 분석 (None => 전체)
    tail_samples: Optional[int] = Field(default=None, ge=3)

    @model_validator(mode="after")
    def _check_cv_order(self) -> "AnalysisParams":
        if not self.periodic_cv_max < self.aperiodic_cv_min:
            raise ValueError("periodic_cv_max < aperiodic_cv_min 이어야 합니다")
        return self


class LatticeSpec(_Section):
    width: int = Field(default=REFERENCE_LATTICE_SIZE[0], ge=MIN_LATTICE_SIZE)
    height: int = Field(default=REFERENCE_LATTICE_SIZE[1], ge=MIN_LATTICE_SIZE)


class SweepSpec(_Section):
    epsilons: List[float] = Field(default_factory=lambda: list(DEFAULT_EPSILON_GRID))
    workers: int = Field(default=settings.SWEEP_MAX_WORKERS, ge=1)

    @field_validator("epsilons", mode="before")
    @classmethod
    def _parse_epsilons(cls, value: Any) -> Any:
        if isinstance(value, (int, float)):
            return [value]
        return _split_list(value, ",")

    @field_validator("epsilons")
    @classmethod
    def _positive(cls, value: List[float]) -> List[float]:
        if any(e <= 0 for e in value):
            raise ValueError("sweep epsilon은 모두 양수여야 합니다")
        return value


class ExperimentConfig(_Section):
    preset: Optional[Preset] = None
    lattice: LatticeSpec = Field(default_factory=LatticeSpec)
    steps: int = Field(default=REFERENCE_STEPS, gt=0)
    model: ModelParams
    init: InitPattern = Field(default_factory=InitPattern)
    probes: ProbeSpec = Field(default_factory=ProbeSpec)
    analysis: AnalysisParams = Field(default_factory=AnalysisParams)
    sweep: SweepSpec = Field(default_factory=SweepSpec)
    output_dir: str = settings.OUTPUT_DIR
    plot_script: bool = False

    @model_validator(mode="after")
    def _check_probe_bounds(self) -> "ExperimentConfig":
        width, height = self.lattice.width, self.lattice.height
        for x, y in self.probes.all_sites():
            if not (0 <= x < width and 0 <= y < height):
                raise ValueError(
                    f"probe site ({x}, {y})가 {width}x{height} 격자 범위를 벗어났습니다"
                )
        return self

    def with_epsilon(self, epsilon: float) -> "ExperimentConfig":
        """epsilon만 바꾼 새 설정 (decay_weight 기본값은 새 epsilon을 따라감)"""
        model = ModelParams.model_validate({**self.model.model_dump(), "epsilon": epsilon})
        return self.model_copy(update={"model": model})
