"""
qubit 격자 동역학 알고리즘 및 분석 유틸리티
"""

from app.algorithms.lattice import renormalize, neighbors, correlation
from app.algorithms.dynamics import (
    coupling_delta,
    decay_delta,
    collapse_if_threshold,
    step,
    oracle_step,
    simulate,
)
from app.algorithms.initialization import init_lattice, random_unit_qubit
from app.algorithms.prng import PCG32
from app.algorithms.analysis import detect_peaks, estimate_period

__all__ = [
    "renormalize",
    "neighbors",
    "correlation",
    "coupling_delta",
    "decay_delta",
    "collapse_if_threshold",
    "step",
    "oracle_step",
    "simulate",
    "init_lattice",
    "random_unit_qubit",
    "PCG32",
    "detect_peaks",
    "estimate_period",
]
