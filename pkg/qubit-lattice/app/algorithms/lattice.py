import math
from typing import List, Tuple

import numpy as np

from app.core.config import ZERO_NORM_TOLERANCE
from app.core.exceptions import ZeroNormError
from app.models.domain import LatticeState, Qubit, SiteIndex, check_lattice_size


def renormalize(q: Qubit) -> Qubit:
    """(c, s)를 단위 벡터로 정규화"""
    norm_sq = q.c * q.c + q.s * q.s
    if norm_sq < ZERO_NORM_TOLERANCE:
        raise ZeroNormError(f"정규화 불가: (c, s) = ({q.c}, {q.s})")
    n = math.sqrt(norm_sq)
    return Qubit(q.c / n, q.s / n)


def renormalize_arrays(c: np.ndarray, s: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """격자 전체 정규화 (벡터화 버전)"""
    norm_sq = c * c + s * s
    bad = norm_sq < ZERO_NORM_TOLERANCE
    if bad.any():
        y, x = np.argwhere(bad)[0]
        raise ZeroNormError(
            f"정규화 불가: site ({x}, {y}), (c, s) = ({c[y, x]}, {s[y, x]})"
        )
    n = np.sqrt(norm_sq)
    return c / n, s / n


# 순서 고정 (left, right, up, down) => 구현 간 누적 순서 일치
def neighbors(idx: SiteIndex, width: int, height: int) -> List[SiteIndex]:
    """주기 경계 von Neumann 이웃 4개"""
    check_lattice_size(width, height)
    x, y = idx.x, idx.y
    return [
        SiteIndex((x - 1) % width, y),
        SiteIndex((x + 1) % width, y),
        SiteIndex(x, (y - 1) % height),
        SiteIndex(x, (y + 1) % height),
    ]


def correlation(state: LatticeState, i: SiteIndex, j: SiteIndex) -> float:
    """<i|j> = c_i c_j + s_i s_j"""
    qi = state.site(i)
    qj = state.site(j)
    return qi.c * qj.c + qi.s * qj.s
