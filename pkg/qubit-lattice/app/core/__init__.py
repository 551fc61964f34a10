"""
Core 설정 및 커스텀 예외
"""

from app.core.config import settings

from app.core.exceptions import (
    QuantumLatticeException,
    ZeroNormError,
    LatticeTooSmallError,
    SiteIndexError,
    OracleSizeError,
    InvalidParameterError,
    ProbeError,
    SeriesTooShortError,
    ConfigParseError,
    ConfigValidationError,
)

__all__ = [
    "settings",
    "QuantumLatticeException",
    "ZeroNormError",
    "LatticeTooSmallError",
    "SiteIndexError",
    "OracleSizeError",
    "InvalidParameterError",
    "ProbeError",
    "SeriesTooShortError",
    "ConfigParseError",
    "ConfigValidationError",
]
