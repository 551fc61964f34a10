"""
그림 재현용 preset

모든 preset: 40x40 격자, 40,000 step, 내부 AllGround (seed 없이 결정적)
설정 파일의 명시 값이 preset 값을 덮어씀
"""

import copy
from typing import Any, Dict

from app.core.config import DEFAULT_EPSILON_GRID, REFERENCE_LATTICE_SIZE, REFERENCE_STEPS
from app.models.params import Preset

_BASE: Dict[str, Any] = {
    "lattice": {
        "width": REFERENCE_LATTICE_SIZE[0],
        "height": REFERENCE_LATTICE_SIZE[1],
    },
    "steps": REFERENCE_STEPS,
    "init": {"boundary": "AllFourSides", "interior": "AllGround"},
}

# AND.|0> 감쇠는 c-NOT 10 step에 한 번 (decay_weight = epsilon 유지)
NO_THRESHOLD_DECAY_EVERY = 10

# 강결합 정지 상태에서 c 부호가 매 step 뒤집힘 => 짝수 step만 기록
STATIC_SAMPLE_STRIDE = 2

_NO_THRESHOLD = {
    "model": {
        "epsilon": 0.01,
        "variant": "NoThreshold",
        "decay_every": NO_THRESHOLD_DECAY_EVERY,
    }
}
_THRESHOLD = {"model": {"epsilon": 0.01, "variant": "Threshold", "c_thres": 0.7}}

PRESETS: Dict[Preset, Dict[str, Any]] = {
    # 단일 site c 진동, 고정 주기 없음
    Preset.FIG1: _NO_THRESHOLD,
    # 같은 조건의 pair correlation
    Preset.FIG2: _NO_THRESHOLD,
    # 전체 c 합의 주기 진동
    Preset.FIG3: _THRESHOLD,
    Preset.FIG4: _THRESHOLD,
    # 강결합 + x 두 변만 입력 => 마지막 500 step (샘플 250개) 정지
    Preset.FIG5: {
        "model": {"epsilon": 0.8, "variant": "Threshold", "c_thres": 0.7},
        "init": {"boundary": "TwoOppositeSidesX"},
        "probes": {"sample_stride": STATIC_SAMPLE_STRIDE},
        "analysis": {"tail_samples": 250, "transient_fraction": 0.0},
    },
    Preset.FIG6: {
        **_THRESHOLD,
        "sweep": {"epsilons": list(DEFAULT_EPSILON_GRID)},
    },
}


def deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """override 우선, 중첩 dict는 재귀 병합 (입력은 변경하지 않음)"""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def expand_preset(preset: Preset) -> Dict[str, Any]:
    """preset 전체 설정 dict (ExperimentConfig.model_validate 입력 형태)"""
    expanded = deep_merge(_BASE, PRESETS[preset])
    expanded["preset"] = preset.value
    return expanded
