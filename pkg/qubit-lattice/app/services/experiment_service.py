# 실험 단위 실행 (시뮬레이션 + 분석 + 파일 출력)

import json
import logging
import time
from pathlib import Path
from typing import Dict, Optional, Sequence

import numpy as np

from app.algorithms.analysis import (
    analysis_window,
    classify_channels,
    is_strictly_decreasing,
    period_law,
    total_variation,
)
from app.core.config import settings
from app.core.exceptions import QuantumLatticeException, SeriesTooShortError
from app.models.domain import ChannelSummary, RunReport, TimeSeriesRecord
from app.models.params import Classification, ExperimentConfig
from app.services import output_service
from app.services.observables import SUM_CHANNEL
from app.services.simulation_service import SimulationService
from app.services.sweep_service import sweep_periods

logger = logging.getLogger(__name__)

TIMESERIES_FILE = "timeseries.csv"
ANALYSIS_FILE = "analysis.csv"
PERIODS_FILE = "periods.csv"
REPORT_FILE = "report.txt"
PLOT_SCRIPT_FILE = "plot_results.py"


def _summarize(
    record: TimeSeriesRecord, config: ExperimentConfig
) -> Dict[str, ChannelSummary]:
    estimates = classify_channels(record, config.analysis)
    summaries = {}
    for name, estimate in estimates.items():
        series = record.channel(name)
        try:
            window, _ = analysis_window(series, config.analysis)
            window_tv = total_variation(window)
        except SeriesTooShortError:
            window_tv = float("nan")
        summaries[name] = ChannelSummary(
            name=name,
            estimate=estimate,
            minimum=float(np.min(series)) if len(series) else float("nan"),
            maximum=float(np.max(series)) if len(series) else float("nan"),
            window_total_variation=window_tv,
        )
    return summaries


def canonical_channel(report: RunReport) -> Optional[str]:
    """분류 대표 채널: sum_c, 없으면 첫 채널"""
    if SUM_CHANNEL in report.channels:
        return SUM_CHANNEL
    return next(iter(report.channels), None)


def _log_run_metrics(
    event: str, config: ExperimentConfig, report: RunReport, **extra
) -> None:
    """
    run 메트릭 로깅 => 로그 수집기에서 분석
    """
    if report.wall_time_s > settings.SLOW_RUN_THRESHOLD_S:
        logger.warning(
            f"느린 실행: {report.wall_time_s:.1f}s > {settings.SLOW_RUN_THRESHOLD_S}s"
        )

    if not settings.ENABLE_RUN_METRICS:
        return

    metrics = {
        "event": event,
        "preset": config.preset.value if config.preset else None,
        "epsilon": config.model.epsilon,
        "variant": config.model.variant.value,
        "lattice": f"{config.lattice.width}x{config.lattice.height}",
        "steps": config.steps,
        "wall_time_s": round(report.wall_time_s, 3),
        "max_norm_error": report.max_norm_error,
    }
    channel = canonical_channel(report)
    if channel is not None:
        metrics["channel"] = channel
        metrics["classification"] = report.classification(channel).value
    metrics.update(extra)

    logger.info(f"METRICS: {json.dumps(metrics, ensure_ascii=False)}")


def _finish(report: RunReport, config: ExperimentConfig, output_dir: Path) -> None:
    if config.plot_script:
        path = output_service.write_plot_script(
            report.files, output_dir / PLOT_SCRIPT_FILE
        )
        report.files["plot_script"] = str(path)
    report.files["report"] = str(output_dir / REPORT_FILE)
    output_service.write_report(report, output_dir / REPORT_FILE)


def run_experiment(config: ExperimentConfig) -> RunReport:
    """
    초기화 -> steps 진행 -> probe 기록 -> 분석 -> CSV/report 출력

    config(seed 포함)가 같으면 CSV 출력은 바이트 단위로 동일
    """
    output_dir = Path(config.output_dir)
    report = RunReport(config=config.model_dump(mode="json"))
    report.notes.append(f"interior={config.init.interior.value}")

    try:
        logger.info(
            f"1/3 시뮬레이션: {config.lattice.width}x{config.lattice.height}, "
            f"{config.steps} steps, eps={config.model.epsilon}"
        )
        result = SimulationService().run(config)
        report.wall_time_s = result.wall_time_s
        report.max_norm_error = result.max_norm_error

        logger.info(f"2/3 분석: {len(result.record.channel_names)}개 채널")
        report.channels = _summarize(result.record, config)

        logger.info(f"3/3 출력: {output_dir}")
        path = output_service.emit_timeseries_csv(
            result.record, output_dir / TIMESERIES_FILE
        )
        report.files["timeseries"] = str(path)
        path = output_service.emit_analysis_csv(report, output_dir / ANALYSIS_FILE)
        report.files["analysis"] = str(path)
        _finish(report, config, output_dir)

    except QuantumLatticeException as e:
        logger.error(f"실험 실패: {e.message}")
        raise
    except Exception as e:
        logger.error(f"실험 오류: {e}", exc_info=True)
        raise

    for name, summary in report.channels.items():
        logger.info(
            f"  {name}: {summary.estimate.classification.value}, "
            f"period={summary.estimate.period_steps:.2f}, cv={summary.estimate.cv:.4f}"
        )
    _log_run_metrics("experiment_run", config, report)
    return report


def run_sweep(
    config: ExperimentConfig, epsilons: Optional[Sequence[float]] = None
) -> RunReport:
    """sweep_periods 실행 후 periods CSV 출력 (epsilons 생략 시 config.sweep.epsilons)"""
    output_dir = Path(config.output_dir)
    epsilons = list(config.sweep.epsilons if epsilons is None else epsilons)
    report = RunReport(config=config.model_dump(mode="json"))
    report.notes.append(f"interior={config.init.interior.value}")

    start_time = time.time()
    try:
        rows = sweep_periods(epsilons, config, config.analysis, config.sweep.workers)
        report.sweep_rows = rows
        report.wall_time_s = time.time() - start_time

        path = output_service.emit_periods_csv(rows, output_dir / PERIODS_FILE)
        report.files["periods"] = str(path)

        if len(rows) > 1:
            report.notes.append(
                f"period_strictly_decreasing={is_strictly_decreasing(rows)}"
            )
            for entry in period_law(rows):
                report.notes.append(
                    f"eps={entry['epsilon']!r} period_times_epsilon="
                    f"{entry['period_times_epsilon']!r} "
                    f"relative_deviation={entry['relative_deviation']!r}"
                )
        failed = [row for row in rows if row.error]
        if failed:
            report.notes.append(f"failed_rows={len(failed)}")
        _finish(report, config, output_dir)

    except QuantumLatticeException as e:
        logger.error(f"sweep 실패: {e.message}")
        raise
    except Exception as e:
        logger.error(f"sweep 오류: {e}", exc_info=True)
        raise

    _log_run_metrics(
        "sweep_run",
        config,
        report,
        rows=len(rows),
        periodic_rows=sum(
            1 for r in rows if r.estimate.classification == Classification.PERIODIC
        ),
    )
    return report
