"""
Qubit Lattice Simulator - CLI

c-NOT 결합 qubit 격자 시뮬레이션
preset 그림 재현, epsilon sweep, CSV 출력

사용 예:
    qlattice run --preset Fig3 --output-dir results/fig3
    qlattice run --config exp.cfg --set model.epsilon=0.02 --seed 7
    qlattice sweep --config fig6.cfg --epsilons 0.005,0.01,0.02 --workers 4
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from app.core.config import (
    EXIT_OK,
    EXIT_RUNTIME_ERROR,
    EXIT_VALIDATION_ERROR,
    settings,
)
from app.core.exceptions import (
    ConfigParseError,
    ConfigValidationError,
    InvalidParameterError,
    QuantumLatticeException,
)
from app.models.domain import RunReport
from app.models.params import Preset
from app.services.config_parser_service import parse_assignment, parse_config
from app.services.experiment_service import run_experiment, run_sweep

logger = logging.getLogger(__name__)

VALIDATION_ERRORS = (ConfigParseError, ConfigValidationError, InvalidParameterError)


def _configure_logging() -> None:
    logging.basicConfig(
        level=logging.DEBUG if settings.DEBUG else logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value 설정 파일 경로")
    common.add_argument(
        "--preset", choices=[p.value for p in Preset], help="그림 재현 preset"
    )
    common.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="설정 값 덮어쓰기 (여러 번 사용 가능)",
    )
    common.add_argument("--output-dir", help="결과 파일 디렉터리")
    common.add_argument("--seed", type=int, help="내부 난수 초기화 seed (u64)")
    common.add_argument("--workers", type=int, help="sweep 병렬 프로세스 수")
    common.add_argument(
        "--plot-script",
        action="store_true",
        help="CSV를 그리는 plot_results.py 생성",
    )

    parser = argparse.ArgumentParser(
        prog="qlattice",
        description=f"{settings.PROJECT_NAME} {settings.VERSION}",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser("run", parents=[common], help="단일 실험 실행")
    sweep = subparsers.add_parser("sweep", parents=[common], help="epsilon sweep")
    sweep.add_argument("--epsilons", help="쉼표로 구분한 epsilon 목록")
    return parser


def _cli_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    overrides: Dict[str, Any] = {}
    if args.output_dir is not None:
        overrides["output_dir"] = args.output_dir
    if args.seed is not None:
        overrides["init.seed"] = args.seed
    if args.workers is not None:
        overrides["sweep.workers"] = args.workers
    if args.plot_script:
        overrides["plot_script"] = True
    return overrides


def _parse_epsilons(text: str) -> List[float]:
    try:
        epsilons = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigValidationError(
            f"--epsilons 값을 해석할 수 없습니다: '{text}'", fields=["epsilons"]
        )
    if any(not eps > 0 for eps in epsilons):
        raise ConfigValidationError(
            f"--epsilons 값은 모두 양수여야 합니다: '{text}'", fields=["epsilons"]
        )
    return epsilons


def _outputs_exist(report: RunReport) -> bool:
    missing = [p for p in report.files.values() if not Path(p).exists()]
    for path in missing:
        logger.error(f"출력 파일이 없습니다: {path}")
    return not missing


def main(argv: Optional[List[str]] = None) -> int:
    _configure_logging()
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse 사용법 오류도 설정 오류로 취급
        return EXIT_OK if e.code == 0 else EXIT_VALIDATION_ERROR

    logger.info("=" * 60)
    logger.info(f"{settings.PROJECT_NAME} {args.command} 시작")
    logger.info("=" * 60)

    try:
        if args.config is None and args.preset is None:
            raise ConfigValidationError(
                "--config 또는 --preset 중 하나는 필요합니다", fields=["config"]
            )
        text = Path(args.config).read_text(encoding="utf-8") if args.config else ""

        # 적용 순서: preset < 설정 파일 < --set < 개별 CLI 옵션
        overrides = dict(parse_assignment(item) for item in args.overrides)
        overrides.update(_cli_overrides(args))
        config = parse_config(text, overrides=overrides, preset=args.preset)

        if args.command == "sweep":
            epsilons = _parse_epsilons(args.epsilons) if args.epsilons else None
            report = run_sweep(config, epsilons)
        else:
            report = run_experiment(config)

        if not _outputs_exist(report):
            return EXIT_RUNTIME_ERROR

    except VALIDATION_ERRORS as e:
        logger.error(f"설정 오류 [{e.code}]: {e.message}")
        return EXIT_VALIDATION_ERROR
    except QuantumLatticeException as e:
        logger.error(f"실행 실패 [{e.code}]: {e.message}")
        return EXIT_RUNTIME_ERROR
    except Exception as e:
        logger.error(f"실행 오류: {e}", exc_info=True)
        return EXIT_RUNTIME_ERROR

    logger.info("=" * 60)
    logger.info(f"완료: {len(report.files)}개 파일 => {config.output_dir}")
    logger.info("=" * 60)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
