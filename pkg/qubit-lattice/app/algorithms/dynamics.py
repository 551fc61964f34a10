"""
c-NOT^4 결합 + AND.|0> 감쇠/threshold collapse 한 step

step()은 격자 전체를 numpy로 한 번에 갱신 (동기 갱신, double buffering)
oracle_step()은 site 단위 순수 파이썬 루프 + 정확한 회전 => 테스트 기준용
"""

import logging
import math
from typing import Callable, Iterator, Optional

import numpy as np

from app.algorithms.lattice import neighbors, renormalize, renormalize_arrays
from app.core.config import ORACLE_MAX_SIZE
from app.core.exceptions import InvalidParameterError, OracleSizeError
from app.models.domain import LatticeState, Qubit, SiteIndex, StepDelta
from app.models.params import ModelParams, ThresholdMode

logger = logging.getLogger(__name__)


def coupling_delta(controller: Qubit, target: Qubit, epsilon: float) -> StepDelta:
    """controller (c, s)가 target (c', s')에 주는 증분 eps * (-s' c, c' c)"""
    return StepDelta(
        -epsilon * target.s * controller.c,
        epsilon * target.c * controller.c,
    )


def decay_delta(q: Qubit, decay_weight: float) -> StepDelta:
    """model A의 AND.|0> 소폭 적용 => excited 진폭을 0 쪽으로"""
    return StepDelta(-decay_weight * q.c, 0.0)


def _crosses_threshold(c: float, params: ModelParams) -> bool:
    if params.threshold_mode == ThresholdMode.MAGNITUDE:
        return abs(c) >= params.c_thres
    return c >= params.c_thres


def collapse_if_threshold(q: Qubit, params: ModelParams) -> Qubit:
    """threshold 도달 시 ground (0, 1)로 collapse"""
    if not params.is_threshold:
        raise InvalidParameterError("collapse는 Threshold variant에서만 적용됩니다")
    if _crosses_threshold(q.c, params):
        return Qubit.ground()
    return q


def _decay_applies(state: LatticeState, params: ModelParams) -> bool:
    if params.is_threshold:
        return False
    return state.step_count % params.decay_every == 0


def step(state: LatticeState, params: ModelParams) -> LatticeState:
    """
    동기 갱신 1 step

    1. 이웃 4개(left, right, up, down)를 controller로 하는 coupling 증분 누적
    2. NoThreshold => decay 증분 추가
    3. 시각 t 값에 더한 뒤 정규화
    4. Threshold => collapse

    입력 스냅샷은 변경하지 않음
    """
    c, s = state.c, state.s

    # np.roll(c, 1, axis=1)[y, x] == c[y, x-1] => left
    controller_sum = (
        np.roll(c, 1, axis=1)
        + np.roll(c, -1, axis=1)
        + np.roll(c, 1, axis=0)
        + np.roll(c, -1, axis=0)
    )
    a = params.epsilon * controller_sum

    new_c = c - a * s
    new_s = s + a * c

    if _decay_applies(state, params):
        new_c = new_c - params.effective_decay_weight * c

    new_c, new_s = renormalize_arrays(new_c, new_s)

    if params.is_threshold:
        if params.threshold_mode == ThresholdMode.MAGNITUDE:
            fired = np.abs(new_c) >= params.c_thres
        else:
            fired = new_c >= params.c_thres
        new_c[fired] = 0.0
        new_s[fired] = 1.0

    return LatticeState(state.width, state.height, new_c, new_s, state.step_count + 1)


def oracle_step(
    state: LatticeState, params: ModelParams, site_order: str = "forward"
) -> LatticeState:
    """
    step()과 다른 계산 경로의 기준 구현 (작은 격자 전용)

    decay가 없을 때 증분 합 + 정규화는 각도 arctan(eps * sum c_n)의 회전과 같음
    => site마다 정확한 회전을 적용하고, decay/collapse는 step과 같은 산술로 처리
    """
    width, height = state.width, state.height
    if width > ORACLE_MAX_SIZE or height > ORACLE_MAX_SIZE:
        raise OracleSizeError(
            f"oracle_step은 {ORACLE_MAX_SIZE}x{ORACLE_MAX_SIZE} 이하만 지원: {width}x{height}"
        )
    if site_order not in ("forward", "reverse"):
        raise InvalidParameterError(f"site_order는 forward/reverse 중 하나: {site_order}")

    sites = [SiteIndex(x, y) for y in range(height) for x in range(width)]
    if site_order == "reverse":
        sites.reverse()

    apply_decay = _decay_applies(state, params)
    decay_weight = params.effective_decay_weight

    new_c = [[0.0] * width for _ in range(height)]
    new_s = [[0.0] * width for _ in range(height)]

    for idx in sites:
        q = state.site(idx)
        total = 0.0
        for n in neighbors(idx, width, height):
            total += float(state.c[n.y, n.x])
        a = params.epsilon * total

        theta = math.atan(a)
        cos_t, sin_t = math.cos(theta), math.sin(theta)
        rc = cos_t * q.c - sin_t * q.s
        rs = sin_t * q.c + cos_t * q.s

        if apply_decay:
            # 회전 전 크기 sqrt(1 + a^2)를 되살린 뒤 decay 증분을 더함
            scale = math.sqrt(1.0 + a * a)
            out = renormalize(Qubit(scale * rc - decay_weight * q.c, scale * rs))
        else:
            out = renormalize(Qubit(rc, rs))

        if params.is_threshold:
            out = collapse_if_threshold(out, params)

        new_c[idx.y][idx.x] = out.c
        new_s[idx.y][idx.x] = out.s

    return LatticeState(
        width, height, np.array(new_c), np.array(new_s), state.step_count + 1
    )


def simulate(
    state: LatticeState,
    params: ModelParams,
    steps: int,
    on_step: Optional[Callable[[LatticeState], None]] = None,
) -> Iterator[LatticeState]:
    """steps 만큼 진행하며 스냅샷을 순서대로 yield"""
    for _ in range(steps):
        state = step(state, params)
        if on_step is not None:
            on_step(state)
        yield state
