"""
테스트 공용 헬퍼
"""

import math

import numpy as np

from app.models.domain import LatticeState


def random_state(rng: np.random.Generator, width: int, height: int) -> LatticeState:
    """단위원 위 임의 상태 (numpy Generator 사용)"""
    theta = rng.uniform(0.0, 2.0 * math.pi, size=(height, width))
    return LatticeState(width, height, np.sin(theta), np.cos(theta))
