# 실행 중 probe 측정값 기록

import logging
from typing import Any, Dict, Optional

import numpy as np

from app.algorithms.lattice import correlation
from app.core.exceptions import ProbeError, SiteIndexError
from app.models.domain import LatticeState, SiteIndex, TimeSeriesRecord
from app.models.params import ProbeSpec

logger = logging.getLogger(__name__)

SUM_CHANNEL = "sum_c"
MEAN_CHANNEL = "mean_c"


def site_channel(x: int, y: int, part: str = "c") -> str:
    return f"{part}_{x}_{y}"


def pair_channel(first: tuple, second: tuple) -> str:
    (x1, y1), (x2, y2) = first, second
    return f"corr_{x1}_{y1}_{x2}_{y2}"


def sum_c(state: LatticeState) -> float:
    """격자 전체 c 합, |sum_c| <= W * H"""
    return float(np.sum(state.c))


def validate_probes(probes: ProbeSpec, width: int, height: int) -> None:
    for x, y in probes.all_sites():
        if not (0 <= x < width and 0 <= y < height):
            raise SiteIndexError(
                f"probe site ({x}, {y})가 {width}x{height} 격자 범위를 벗어났습니다"
            )


def new_record(
    probes: ProbeSpec, metadata: Optional[Dict[str, Any]] = None
) -> TimeSeriesRecord:
    """probe 설정 순서대로 빈 채널 생성"""
    channels: Dict[str, list] = {}
    for x, y in probes.single_sites:
        channels[site_channel(x, y)] = []
        if probes.record_s:
            channels[site_channel(x, y, part="s")] = []
    for first, second in probes.pairs:
        channels[pair_channel(first, second)] = []
    if probes.record_sum:
        channels[SUM_CHANNEL] = []
    if probes.record_mean:
        channels[MEAN_CHANNEL] = []

    return TimeSeriesRecord(
        steps=[],
        channels=channels,
        metadata=dict(metadata or {}),
        sample_stride=probes.sample_stride,
    )


def record(
    state: LatticeState, probes: ProbeSpec, rec: TimeSeriesRecord
) -> TimeSeriesRecord:
    """
    현재 스냅샷 측정값을 record에 추가 (스냅샷은 읽기만 함)

    호출 측에서 step_count % sample_stride == 0 일 때만 호출
    """
    if state.step_count % probes.sample_stride != 0:
        raise ProbeError(
            f"step {state.step_count}은 sample_stride {probes.sample_stride}의 배수가 아닙니다"
        )
    if rec.steps and state.step_count <= rec.steps[-1]:
        raise ProbeError(
            f"step은 증가해야 합니다: 마지막 {rec.steps[-1]}, 현재 {state.step_count}"
        )

    # 범위 검사를 먼저 끝내야 채널 길이가 어긋나지 않음
    row: Dict[str, float] = {}
    for x, y in probes.single_sites:
        q = state.site(SiteIndex(x, y))
        row[site_channel(x, y)] = q.c
        if probes.record_s:
            row[site_channel(x, y, part="s")] = q.s
    for first, second in probes.pairs:
        row[pair_channel(first, second)] = correlation(
            state, SiteIndex(*first), SiteIndex(*second)
        )
    if probes.record_sum or probes.record_mean:
        total = sum_c(state)
        if probes.record_sum:
            row[SUM_CHANNEL] = total
        if probes.record_mean:
            row[MEAN_CHANNEL] = total / state.size

    if set(row) != set(rec.channels):
        raise ProbeError(
            f"record 채널 {rec.channel_names}과 probe 설정이 일치하지 않습니다"
        )

    rec.steps.append(state.step_count)
    for name, value in row.items():
        rec.channels[name].append(value)
    return rec
