import logging
import math

import numpy as np

from app.algorithms.prng import PCG32
from app.models.domain import LatticeState, Qubit, check_lattice_size
from app.models.params import Boundary, InitPattern, Interior

logger = logging.getLogger(__name__)


def qubit_from_angle(theta: float) -> Qubit:
    """theta = 0 => ground (0, 1), theta = pi/2 => excited (1, 0)"""
    return Qubit(math.sin(theta), math.cos(theta))


def random_unit_qubit(rng: PCG32) -> Qubit:
    """단위원 위 균등 분포 qubit"""
    theta = 2.0 * math.pi * rng.next_double()
    return qubit_from_angle(theta)


def boundary_mask(width: int, height: int, boundary: Boundary) -> np.ndarray:
    """(H, W) bool 배열, True => 입력이 들어가는 경계 site"""
    check_lattice_size(width, height)
    mask = np.zeros((height, width), dtype=bool)

    if boundary in (Boundary.ALL_FOUR_SIDES, Boundary.TWO_OPPOSITE_SIDES_X):
        # x 방향으로 뻗은 두 변 => y = 0, y = H-1 행
        mask[0, :] = True
        mask[height - 1, :] = True
    if boundary in (Boundary.ALL_FOUR_SIDES, Boundary.TWO_OPPOSITE_SIDES_Y):
        mask[:, 0] = True
        mask[:, width - 1] = True

    return mask


def init_lattice(width: int, height: int, pattern: InitPattern) -> LatticeState:
    """
    실험 시나리오별 초기 격자 생성

    경계 => excited_value, 내부 => ground 또는 seed 기반 단위원 난수
    난수는 row-major 순서 (y, x)로 내부 site에만 소비
    """
    mask = boundary_mask(width, height, pattern.boundary)

    c = np.zeros((height, width))
    s = np.ones((height, width))

    if pattern.interior == Interior.RANDOM_UNIT_CIRCLE:
        rng = PCG32(pattern.seed)
        for y in range(height):
            for x in range(width):
                if mask[y, x]:
                    continue
                q = random_unit_qubit(rng)
                c[y, x] = q.c
                s[y, x] = q.s

    excited_c, excited_s = pattern.excited_value
    c[mask] = excited_c
    s[mask] = excited_s

    logger.debug(
        f"격자 초기화: {width}x{height}, boundary={pattern.boundary.value}, "
        f"interior={pattern.interior.value}, excited={int(mask.sum())}"
    )
    return LatticeState(width, height, c, s, step_count=0)
