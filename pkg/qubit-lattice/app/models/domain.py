import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from app.core.config import MIN_LATTICE_SIZE, NORMALIZATION_TOLERANCE
from app.core.exceptions import LatticeTooSmallError, SiteIndexError
from app.models.params import Classification

# domain 정의


@dataclass(frozen=True, slots=True)
class Qubit:
    # (c, s) => c: |1> (excited) 진폭, s: |0> (ground) 진폭
    c: float
    s: float

    @classmethod
    def ground(cls) -> "Qubit":
        return cls(0.0, 1.0)

    @classmethod
    def excited(cls, sign: float = 1.0) -> "Qubit":
        return cls(math.copysign(1.0, sign), 0.0)

    @property
    def norm_sq(self) -> float:
        return self.c * self.c + self.s * self.s

    def is_normalized(self, tol: float = NORMALIZATION_TOLERANCE) -> bool:
        return abs(self.norm_sq - 1.0) < tol

    def as_tuple(self) -> Tuple[float, float]:
        return (self.c, self.s)


@dataclass(frozen=True, slots=True)
class SiteIndex:
    x: int  # column
    y: int  # row

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise SiteIndexError(f"음수 좌표는 허용되지 않습니다: ({self.x}, {self.y})")

    @classmethod
    def checked(cls, x: int, y: int, width: int, height: int) -> "SiteIndex":
        """격자 크기 기준으로 범위 검사 후 생성"""
        if not (0 <= x < width and 0 <= y < height):
            raise SiteIndexError(
                f"site ({x}, {y})가 {width}x{height} 격자 범위를 벗어났습니다"
            )
        return cls(x, y)

    @classmethod
    def parse(cls, text: str) -> "SiteIndex":
        """'x,y' 문자열 파싱"""
        try:
            x_text, y_text = text.split(",")
            return cls(int(x_text), int(y_text))
        except ValueError:
            raise SiteIndexError(f"site 좌표 형식이 잘못되었습니다: '{text}'")

    def within(self, width: int, height: int) -> bool:
        return self.x < width and self.y < height

    def label(self) -> str:
        return f"{self.x}_{self.y}"


@dataclass(frozen=True, slots=True)
class StepDelta:
    # 정규화 이전 누적 증분
    dc: float
    ds: float

    def __add__(self, other: "StepDelta") -> "StepDelta":
        return StepDelta(self.dc + other.dc, self.ds + other.ds)


def check_lattice_size(width: int, height: int) -> None:
    if width < MIN_LATTICE_SIZE or height < MIN_LATTICE_SIZE:
        raise LatticeTooSmallError(
            f"격자 크기는 {MIN_LATTICE_SIZE}x{MIN_LATTICE_SIZE} 이상이어야 합니다: "
            f"{width}x{height}"
        )


# eq=False => numpy 배열 비교는 equals() 사용
@dataclass(frozen=True, eq=False)
class LatticeState:
    """
    W x H qubit 격자 스냅샷 (주기 경계)

    c, s 배열은 (H, W) 모양이며 [y, x]로 접근
    생성 후 읽기 전용 => 스레드 간 공유 가능, 변경은 새 스냅샷 생성으로만
    """

    width: int
    height: int
    c: np.ndarray
    s: np.ndarray
    step_count: int = 0

    def __post_init__(self):
        check_lattice_size(self.width, self.height)
        if self.step_count < 0:
            raise ValueError("step_count는 음수일 수 없습니다")

        c = np.array(self.c, dtype=np.float64)
        s = np.array(self.s, dtype=np.float64)
        shape = (self.height, self.width)
        if c.shape != shape or s.shape != shape:
            raise ValueError(f"배열 모양 {c.shape}/{s.shape} != {shape}")

        c.setflags(write=False)
        s.setflags(write=False)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "s", s)

    @classmethod
    def ground(cls, width: int, height: int) -> "LatticeState":
        check_lattice_size(width, height)
        return cls(
            width,
            height,
            np.zeros((height, width)),
            np.ones((height, width)),
        )

    @classmethod
    def from_qubits(cls, grid: List[List[Qubit]], step_count: int = 0) -> "LatticeState":
        """grid[y][x] 형태의 Qubit 리스트로 생성"""
        height = len(grid)
        width = len(grid[0]) if height else 0
        c = [[q.c for q in row] for row in grid]
        s = [[q.s for q in row] for row in grid]
        return cls(width, height, np.array(c), np.array(s), step_count)

    @property
    def size(self) -> int:
        return self.width * self.height

    def check_index(self, idx: SiteIndex) -> None:
        if not idx.within(self.width, self.height):
            raise SiteIndexError(
                f"site ({idx.x}, {idx.y})가 {self.width}x{self.height} 격자 범위를 벗어났습니다"
            )

    def site(self, idx: SiteIndex) -> Qubit:
        self.check_index(idx)
        return Qubit(float(self.c[idx.y, idx.x]), float(self.s[idx.y, idx.x]))

    def with_site(self, idx: SiteIndex, q: Qubit) -> "LatticeState":
        """한 site만 바꾼 새 스냅샷 반환"""
        self.check_index(idx)
        c = self.c.copy()
        s = self.s.copy()
        c[idx.y, idx.x] = q.c
        s[idx.y, idx.x] = q.s
        return LatticeState(self.width, self.height, c, s, self.step_count)

    def max_norm_error(self) -> float:
        return float(np.max(np.abs(self.c * self.c + self.s * self.s - 1.0)))

    def equals(self, other: "LatticeState", tol: float = 0.0) -> bool:
        if (self.width, self.height) != (other.width, other.height):
            return False
        if tol == 0.0:
            return bool(
                np.array_equal(self.c, other.c) and np.array_equal(self.s, other.s)
            )
        return bool(
            np.max(np.abs(self.c - other.c)) <= tol
            and np.max(np.abs(self.s - other.s)) <= tol
        )


@dataclass
class TimeSeriesRecord:
    """
    probe 채널별 시계열

    channels는 삽입 순서 유지 => CSV 컬럼 순서와 동일
    """

    steps: List[int] = field(default_factory=list)
    channels: Dict[str, List[float]] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)
    sample_stride: int = 1

    @property
    def channel_names(self) -> List[str]:
        return list(self.channels.keys())

    def __len__(self) -> int:
        return len(self.steps)

    def channel(self, name: str) -> np.ndarray:
        return np.asarray(self.channels[name], dtype=np.float64)


@dataclass(frozen=True)
class PeriodEstimate:
    period_steps: float  # 평균 peak 간격 (step), 정의되지 않으면 nan
    cv: float  # peak 간격의 변동계수
    n_peaks: int
    classification: Classification

    @property
    def has_period(self) -> bool:
        return self.n_peaks >= 2 and not math.isnan(self.period_steps)


@dataclass(frozen=True)
class ChannelSummary:
    name: str
    estimate: PeriodEstimate
    minimum: float
    maximum: float
    window_total_variation: float  # 분석 구간의 총변동


@dataclass(frozen=True)
class SweepRow:
    epsilon: float
    estimate: PeriodEstimate
    error: Optional[str] = None

    @property
    def period_times_epsilon(self) -> float:
        return self.estimate.period_steps * self.epsilon


@dataclass
class RunReport:
    config: Dict[str, Any]
    wall_time_s: float = 0.0
    channels: Dict[str, ChannelSummary] = field(default_factory=dict)
    files: Dict[str, str] = field(default_factory=dict)
    max_norm_error: float = 0.0
    sweep_rows: List[SweepRow] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def classification(self, channel: str) -> Classification:
        return self.channels[channel].estimate.classification
