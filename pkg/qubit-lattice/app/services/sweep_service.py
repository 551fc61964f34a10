# epsilon sweep => 주기 표

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

from tqdm import tqdm

from app.algorithms.analysis import estimate_period
from app.core.config import settings
from app.core.exceptions import InvalidParameterError, QuantumLatticeException
from app.models.domain import PeriodEstimate, SweepRow
from app.models.params import AnalysisParams, Classification, ExperimentConfig, ProbeSpec
from app.services.observables import SUM_CHANNEL
from app.services.simulation_service import SimulationService

logger = logging.getLogger(__name__)


def _failed_row(epsilon: float, error: str) -> SweepRow:
    return SweepRow(
        epsilon=epsilon,
        estimate=PeriodEstimate(math.nan, 0.0, 0, Classification.UNDETERMINED),
        error=error,
    )


def _run_row(job: Tuple[ExperimentConfig, float, AnalysisParams]) -> SweepRow:
    """
    sweep 한 행 (worker 프로세스에서 실행 => 모듈 최상위 함수)

    실패한 행은 Undetermined + error 메시지로 표시
    """
    scenario, epsilon, analysis = job
    try:
        config = scenario.with_epsilon(epsilon)
        # 전체 합 채널만 기록
        probes = ProbeSpec(
            single_sites=[],
            pairs=[],
            record_sum=True,
            sample_stride=scenario.probes.sample_stride,
        )
        config = config.model_copy(update={"probes": probes})

        result = SimulationService(show_progress=False).run(config)
        estimate = estimate_period(
            result.record.channels[SUM_CHANNEL], analysis, result.record.sample_stride
        )
        logger.info(
            f"sweep eps={epsilon}: {estimate.classification.value}, "
            f"period={estimate.period_steps:.2f}, cv={estimate.cv:.4f}"
        )
        return SweepRow(epsilon=epsilon, estimate=estimate)
    except QuantumLatticeException as e:
        logger.error(f"sweep eps={epsilon} 실패: {e.message}")
        return _failed_row(epsilon, e.message)
    except Exception as e:
        logger.error(f"sweep eps={epsilon} 오류: {e}", exc_info=True)
        return _failed_row(epsilon, str(e))


def sweep_periods(
    epsilons: Sequence[float],
    scenario: ExperimentConfig,
    analysis: Optional[AnalysisParams] = None,
    workers: Optional[int] = None,
) -> List[SweepRow]:
    """
    epsilon 마다 전체 시뮬레이션 + sum_c 채널 주기 추정

    결과 순서는 완료 순서와 무관하게 입력 epsilon 순서
    """
    if not scenario.model.is_threshold:
        raise InvalidParameterError(
            f"sweep은 Threshold variant 시나리오만 지원합니다: {scenario.model.variant.value}"
        )

    analysis = analysis or scenario.analysis
    workers = workers or scenario.sweep.workers
    jobs = [(scenario, float(eps), analysis) for eps in epsilons]
    if not jobs:
        return []

    logger.info(f"sweep 시작: {len(jobs)}개 epsilon, workers={workers}")

    if workers <= 1 or len(jobs) == 1:
        iterator = jobs
        if settings.SHOW_PROGRESS:
            iterator = tqdm(jobs, desc="sweep", unit="run")
        return [_run_row(job) for job in iterator]

    # executor.map 은 입력 순서대로 결과 반환
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as executor:
        results = executor.map(_run_row, jobs)
        if settings.SHOW_PROGRESS:
            results = tqdm(results, total=len(jobs), desc="sweep", unit="run")
        return list(results)
