# custom exception 정의 및 관리
from typing import List, Optional


class QuantumLatticeException(Exception):  # 예외 구조 정의
    def __init__(self, message: str, code: str = "INTERNAL_ERROR"):
        self.message = message
        self.code = code
        super().__init__(self.message)


class ZeroNormError(QuantumLatticeException):
    def __init__(self, message: str = "norm이 0인 qubit은 정규화할 수 없습니다"):
        super().__init__(message, code="ZERO_NORM")


class LatticeTooSmallError(QuantumLatticeException):
    def __init__(self, message: str = "격자 크기는 3x3 이상이어야 합니다"):
        super().__init__(message, code="LATTICE_TOO_SMALL")


class SiteIndexError(QuantumLatticeException):
    def __init__(self, message: str = "격자 범위를 벗어난 site 입니다"):
        super().__init__(message, code="SITE_OUT_OF_BOUNDS")


class OracleSizeError(QuantumLatticeException):
    def __init__(self, message: str = "oracle_step은 8x8 이하 격자만 지원합니다"):
        super().__init__(message, code="ORACLE_TOO_LARGE")


class InvalidParameterError(QuantumLatticeException):
    def __init__(self, message: str = "유효하지 않은 파라미터입니다"):
        super().__init__(message, code="INVALID_PARAMETER")


class ProbeError(QuantumLatticeException):
    def __init__(self, message: str = "probe 기록 조건이 맞지 않습니다"):
        super().__init__(message, code="PROBE_ERROR")


class SeriesTooShortError(QuantumLatticeException):
    def __init__(self, message: str = "분석하기에 시계열이 너무 짧습니다"):
        super().__init__(message, code="SERIES_TOO_SHORT")


class ConfigParseError(QuantumLatticeException):
    def __init__(
        self,
        message: str = "설정 파일을 해석할 수 없습니다",
        line: Optional[int] = None,
        field: Optional[str] = None,
    ):
        self.line = line
        self.field = field
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field:
            location.append(f"field '{field}'")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message, code="CONFIG_PARSE_ERROR")


class ConfigValidationError(QuantumLatticeException):
    def __init__(
        self,
        message: str = "설정 값 검증에 실패했습니다",
        fields: Optional[List[str]] = None,
    ):
        self.fields = fields or []
        super().__init__(message, code="CONFIG_VALIDATION_ERROR")
