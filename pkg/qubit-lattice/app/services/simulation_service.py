# 격자 시뮬레이션 루프 (초기화 -> step 반복 -> probe 기록)

import logging
import time
from dataclasses import dataclass
from typing import Any, Dict, Optional

from tqdm import tqdm

from app.algorithms.dynamics import step
from app.algorithms.initialization import init_lattice
from app.core.config import settings
from app.core.exceptions import QuantumLatticeException
from app.models.domain import LatticeState, TimeSeriesRecord
from app.models.params import ExperimentConfig
from app.services.observables import new_record, record, validate_probes

logger = logging.getLogger(__name__)


@dataclass
class SimulationResult:
    final_state: LatticeState
    record: TimeSeriesRecord
    max_norm_error: float  # 모든 step 중 최대 |c^2 + s^2 - 1|
    wall_time_s: float

    @property
    def steps(self) -> int:
        return self.final_state.step_count


class SimulationService:

    def __init__(self, show_progress: Optional[bool] = None):
        self.show_progress = (
            settings.SHOW_PROGRESS if show_progress is None else show_progress
        )

    def run(
        self, config: ExperimentConfig, metadata: Optional[Dict[str, Any]] = None
    ) -> SimulationResult:
        """
        config 한 건 실행

        step 0 (초기 상태) 포함, sample_stride 배수 step 마다 기록
        """
        start_time = time.time()
        width, height = config.lattice.width, config.lattice.height
        probes = config.probes

        try:
            validate_probes(probes, width, height)
            state = init_lattice(width, height, config.init)

            meta = {
                "lattice": {"width": width, "height": height},
                "model": config.model.model_dump(mode="json"),
                "init": config.init.model_dump(mode="json"),
            }
            meta.update(metadata or {})
            rec = new_record(probes, meta)
            record(state, probes, rec)
            max_norm_error = state.max_norm_error()

            iterator = range(config.steps)
            if self.show_progress:
                iterator = tqdm(
                    iterator,
                    desc=f"eps={config.model.epsilon}",
                    unit="step",
                    mininterval=1.0,
                )

            for _ in iterator:
                state = step(state, config.model)
                max_norm_error = max(max_norm_error, state.max_norm_error())
                if state.step_count % probes.sample_stride == 0:
                    record(state, probes, rec)

        except QuantumLatticeException as e:
            logger.error(f"시뮬레이션 실패: {e.message}")
            raise
        except Exception as e:
            logger.error(f"시뮬레이션 오류: {e}", exc_info=True)
            raise

        elapsed = time.time() - start_time
        logger.debug(
            f"시뮬레이션 완료: {width}x{height}, {config.steps} steps, "
            f"{len(rec)} samples, {elapsed:.2f}s"
        )
        return SimulationResult(state, rec, max_norm_error, elapsed)
