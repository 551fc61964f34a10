import os
from typing import Tuple
from dotenv import load_dotenv

load_dotenv()  # 환경변수 읽어오기


class Settings:
    PROJECT_NAME: str = "Qubit Lattice Simulator"
    VERSION: str = "1.0.0"

    DEBUG: bool = os.getenv("DEBUG", "False").lower() == "true"

    # 결과 파일 기본 경로 (CLI --output-dir 로 덮어씀)
    OUTPUT_DIR: str = os.getenv("OUTPUT_DIR", "./results")

    # sweep 병렬 실행 워커 수, 1 => 현재 프로세스에서 순차 실행
    SWEEP_MAX_WORKERS: int = int(os.getenv("SWEEP_MAX_WORKERS", 1))

    # tqdm 진행 표시 여부
    SHOW_PROGRESS: bool = os.getenv("SHOW_PROGRESS", "false").lower() == "true"

    # run 단위 메트릭 로깅
    ENABLE_RUN_METRICS: bool = (
        os.getenv("ENABLE_RUN_METRICS", "true").lower() == "true"
    )
    SLOW_RUN_THRESHOLD_S: float = float(
        os.getenv("SLOW_RUN_THRESHOLD_S", 60)
    )  # 40x40 x 40,000 step 기준 예산


settings = Settings()  # 모듈화


# 수치 허용 오차
NORMALIZATION_TOLERANCE = 1e-12
ZERO_NORM_TOLERANCE = 1e-30

# 주기 경계에서 이웃 슬롯이 겹치지 않는 최소 크기
MIN_LATTICE_SIZE = 3

# oracle_step 은 순수 파이썬 루프 => 작은 격자만 허용
ORACLE_MAX_SIZE = 8

REFERENCE_LATTICE_SIZE: Tuple[int, int] = (40, 40)
REFERENCE_STEPS = 40000

# Fig6 sweep 기본 epsilon 그리드 (약결합 ~ 강결합 > 0.7)
DEFAULT_EPSILON_GRID: Tuple[float, ...] = (
    0.005,
    0.01,
    0.02,
    0.05,
    0.1,
    0.2,
    0.4,
    0.8,
)

# 기본 probe => 그림 재현 시 추가 설정 불필요
DEFAULT_PROBE_SITE = (10, 10)
DEFAULT_PROBE_PAIR = ((10, 10), (20, 21))

# CLI 종료 코드
EXIT_OK = 0
EXIT_VALIDATION_ERROR = 1
EXIT_RUNTIME_ERROR = 2
