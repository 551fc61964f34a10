"""
key = value 설정 문서 파서

문법:
    # 주석
    preset = Fig3
    model.epsilon = 0.02
    init.boundary = TwoOppositeSidesX
    probes.pairs = 10,10|20,21; 5,5|6,6

값 타입은 YAML 스칼라 규칙 (0.01 => float, 40000 => int, true => bool)
"""

import logging
import re
from typing import Any, Dict, Iterable, Optional, Tuple, Type, Union

import yaml
from pydantic import BaseModel, ValidationError

from app.core.exceptions import ConfigParseError, ConfigValidationError
from app.models.params import (
    AnalysisParams,
    ExperimentConfig,
    InitPattern,
    LatticeSpec,
    ModelParams,
    Preset,
    ProbeSpec,
    SweepSpec,
)
from app.services.presets import deep_merge, expand_preset

logger = logging.getLogger(__name__)

KEY_PATTERN = re.compile(r"^[a-z_][a-z0-9_]*(\.[a-z_][a-z0-9_]*)?$")

SECTIONS: Dict[str, Type[BaseModel]] = {
    "lattice": LatticeSpec,
    "model": ModelParams,
    "init": InitPattern,
    "probes": ProbeSpec,
    "analysis": AnalysisParams,
    "sweep": SweepSpec,
}

TOP_LEVEL_KEYS = set(ExperimentConfig.model_fields) - set(SECTIONS)


def _check_key(key: str, line: Optional[int]) -> Tuple[str, ...]:
    if not KEY_PATTERN.match(key):
        raise ConfigParseError("잘못된 key 형식", line=line, field=key)

    parts = tuple(key.split("."))
    if len(parts) == 1:
        if parts[0] not in TOP_LEVEL_KEYS:
            raise ConfigParseError("알 수 없는 key", line=line, field=key)
    else:
        section, name = parts
        model = SECTIONS.get(section)
        if model is None or name not in model.model_fields:
            raise ConfigParseError("알 수 없는 key", line=line, field=key)
    return parts


def _typed_value(raw: str, key: str, line: Optional[int]) -> Any:
    raw = raw.strip()
    if raw == "":
        raise ConfigParseError("값이 비어 있습니다", line=line, field=key)
    try:
        value = yaml.safe_load(raw)
    except yaml.YAMLError:
        raise ConfigParseError("값을 해석할 수 없습니다", line=line, field=key)

    # 목록/매핑 문법은 허용하지 않음 => 원문 문자열을 각 필드 validator가 해석
    if isinstance(value, (list, dict)):
        return raw
    return value


def parse_assignment(text: str, line: Optional[int] = None) -> Tuple[str, Any]:
    """'key = value' 한 줄을 (key, typed value)로 변환"""
    key, sep, raw = text.partition("=")
    if not sep:
        raise ConfigParseError("'key = value' 형식이 아닙니다", line=line)
    key = key.strip()
    _check_key(key, line)
    return key, _typed_value(raw, key, line)


def parse_lines(text: str) -> Dict[str, Any]:
    """문서 전체 => {dotted key: value}, 중복 key는 오류"""
    values: Dict[str, Any] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        content = raw_line.split("#", 1)[0].strip()
        if not content:
            continue
        key, value = parse_assignment(content, line=lineno)
        if key in values:
            raise ConfigParseError("중복된 key", line=lineno, field=key)
        values[key] = value
    return values


def _nest(flat: Dict[str, Any]) -> Dict[str, Any]:
    nested: Dict[str, Any] = {}
    for key, value in flat.items():
        if "." in key:
            section, name = key.split(".", 1)
            nested.setdefault(section, {})[name] = value
        else:
            nested[key] = value
    return nested


def _resolve_preset(value: Any) -> Preset:
    try:
        return value if isinstance(value, Preset) else Preset(str(value))
    except ValueError:
        choices = ", ".join(p.value for p in Preset)
        raise ConfigValidationError(
            f"알 수 없는 preset '{value}' (가능한 값: {choices})", fields=["preset"]
        )


def parse_config(
    text: str,
    overrides: Optional[Union[Dict[str, Any], Iterable[str]]] = None,
    preset: Optional[Union[str, Preset]] = None,
) -> ExperimentConfig:
    """
    설정 문서 + CLI override => 검증된 ExperimentConfig

    Args:
        text: key = value 설정 문서
        overrides: {dotted key: value} 또는 'key=value' 문자열 목록 (문서보다 우선)
        preset: 문서의 preset 대신 사용할 preset

    Raises:
        ConfigParseError: 문법 오류, 알 수 없는 key (line/field 포함)
        ConfigValidationError: 값 범위 위반, 필수 값 누락
    """
    flat = parse_lines(text)

    if overrides:
        if isinstance(overrides, dict):
            for key, value in overrides.items():
                _check_key(key, None)
                flat[key] = value
        else:
            for item in overrides:
                key, value = parse_assignment(item)
                flat[key] = value

    if preset is not None:
        flat["preset"] = preset

    document = _nest(flat)
    if document.get("preset") is not None:
        chosen = _resolve_preset(document["preset"])
        document["preset"] = chosen.value
        document = deep_merge(expand_preset(chosen), document)
        logger.debug(f"preset {chosen.value} 적용")

    try:
        config = ExperimentConfig.model_validate(document)
    except ValidationError as e:
        fields = [".".join(str(part) for part in err["loc"]) for err in e.errors()]
        details = "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or '<root>'}: {err['msg']}"
            for err in e.errors()
        )
        raise ConfigValidationError(f"설정 검증 실패: {details}", fields=fields)

    logger.info(
        f"설정 로드: preset={config.preset.value if config.preset else '-'}, "
        f"variant={config.model.variant.value}, eps={config.model.epsilon}, "
        f"{config.lattice.width}x{config.lattice.height}, steps={config.steps}"
    )
    return config
