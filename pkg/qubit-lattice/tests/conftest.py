"""
Pytest 설정 및 공통 Fixture
"""

import os
import sys
from pathlib import Path

import numpy as np
import pytest

# 테스트 중에는 진행 표시 끔 (settings 임포트 전에 설정해야 함)
os.environ.setdefault("SHOW_PROGRESS", "false")

# 프로젝트 루트를 sys.path에 추가
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from app.models.params import (  # noqa: E402
    AnalysisParams,
    ExperimentConfig,
    ModelParams,
    Variant,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def no_threshold_params():
    """model A, eps = decay = 0.01"""
    return ModelParams(epsilon=0.01, variant=Variant.NO_THRESHOLD)


@pytest.fixture
def threshold_params():
    """model B, c_thres = 0.7"""
    return ModelParams(epsilon=0.01, variant=Variant.THRESHOLD, c_thres=0.7)


@pytest.fixture
def no_transient():
    return AnalysisParams(transient_fraction=0.0)


@pytest.fixture
def small_config(tmp_path):
    """
    8x8 격자, 300 step 소형 실험 설정

    기본 probe (10,10)은 범위 밖이므로 명시적으로 지정
    """

    def _build(**overrides):
        document = {
            "lattice": {"width": 8, "height": 8},
            "steps": 300,
            "model": {"epsilon": 0.05, "variant": "Threshold", "c_thres": 0.7},
            "init": {"boundary": "AllFourSides", "interior": "AllGround"},
            "probes": {
                "single_sites": [(2, 2)],
                "pairs": [((2, 2), (5, 6))],
                "record_sum": True,
            },
            "sweep": {"epsilons": [0.05, 0.1], "workers": 1},
            "output_dir": str(tmp_path / "out"),
        }
        document.update(overrides)
        return ExperimentConfig.model_validate(document)

    return _build
