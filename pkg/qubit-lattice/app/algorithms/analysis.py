"""
시계열 regime 분류 + 주기 추정

peak 간격 기반 (relaxation oscillation 파형에도 안정적)
지배적 autocorrelation lag로 peak 최소 간격(refractory)을 정해 한 주기에 peak 하나만 셈
autocorrelation_period()는 교차 검증용으로도 공개
"""

import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.signal import find_peaks

from app.core.exceptions import SeriesTooShortError
from app.models.domain import PeriodEstimate, SweepRow, TimeSeriesRecord
from app.models.params import AnalysisParams, Classification

logger = logging.getLogger(__name__)

# 이보다 낮은 autocorrelation peak는 잡음으로 봄
ACF_MIN_PEAK = 0.2


def analysis_window(
    series: Sequence[float], params: AnalysisParams
) -> Tuple[np.ndarray, int]:
    """
    tail_samples, transient_fraction 적용 후 분석 구간과 원래 시계열 기준 offset 반환
    """
    arr = np.asarray(series, dtype=np.float64)
    offset = 0
    if params.tail_samples is not None and len(arr) > params.tail_samples:
        offset = len(arr) - params.tail_samples
        arr = arr[offset:]

    start = int(len(arr) * params.transient_fraction)
    window = arr[start:]
    if len(window) < 3:
        raise SeriesTooShortError(
            f"transient 제거 후 샘플 {len(window)}개 (최소 3개 필요)"
        )
    return window, offset + start


def dominant_lag(window: np.ndarray) -> float:
    """
    첫 zero crossing 이후, n/2 이하 lag 중 가장 높은 autocorrelation peak의 lag

    ACF_MIN_PEAK 미만 peak만 있으면 (잡음) nan
    """
    acf = autocorrelation(window)

    negative = np.nonzero(acf < 0)[0]
    if len(negative) == 0:
        return math.nan
    start = int(negative[0])

    segment = acf[start : len(acf) // 2 + 1]
    if len(segment) < 3:
        return math.nan

    peaks, props = find_peaks(segment, height=ACF_MIN_PEAK)
    if len(peaks) == 0:
        return math.nan
    return float(start + peaks[int(np.argmax(props["peak_heights"]))])


def refractory_distance(window: np.ndarray, params: AnalysisParams) -> int:
    """
    peak 최소 간격 (샘플 단위) = refractory_fraction * dominant_lag

    dominant_lag 가 없으면 1 (제한 없음)
    """
    lag = dominant_lag(window)
    if math.isnan(lag):
        return 1
    return max(1, int(params.refractory_fraction * lag))


def detect_peaks(series: Sequence[float], params: AnalysisParams) -> List[int]:
    """
    진동 한 주기당 peak 하나 (원래 시계열 기준 인덱스)

    - 높이 > mean + k * std, prominence >= k * std
    - refractory 간격 안의 작은 peak 제거
    - 평평한 꼭대기는 가운데 인덱스 하나로 셈
    """
    window, offset = analysis_window(series, params)
    sigma = float(np.std(window))
    if sigma == 0.0:
        return []

    k = params.peak_prominence_sigma
    peaks, _ = find_peaks(
        window,
        height=float(np.mean(window)) + k * sigma,
        prominence=max(k, 0.0) * sigma,
        distance=refractory_distance(window, params),
    )
    return [offset + int(i) for i in peaks]


def estimate_period(
    series: Sequence[float], params: AnalysisParams, sample_stride: int = 1
) -> PeriodEstimate:
    """
    Static / Periodic / Aperiodic / Undetermined 분류

    period_steps = 평균 peak 간격 * sample_stride
    """
    window, _ = analysis_window(series, params)

    if float(np.std(window)) < params.static_tolerance:
        return PeriodEstimate(
            period_steps=math.nan,
            cv=0.0,
            n_peaks=0,
            classification=Classification.STATIC,
        )

    peaks = detect_peaks(series, params)
    n_peaks = len(peaks)
    if n_peaks < 2:
        return PeriodEstimate(math.nan, 0.0, n_peaks, Classification.UNDETERMINED)

    intervals = np.diff(np.asarray(peaks, dtype=np.float64))
    mean_interval = float(np.mean(intervals))
    cv = float(np.std(intervals) / mean_interval)

    if n_peaks >= params.min_peaks and cv <= params.periodic_cv_max:
        classification = Classification.PERIODIC
    elif n_peaks >= params.min_peaks and cv >= params.aperiodic_cv_min:
        classification = Classification.APERIODIC
    else:
        classification = Classification.UNDETERMINED

    return PeriodEstimate(
        period_steps=mean_interval * sample_stride,
        cv=cv,
        n_peaks=n_peaks,
        classification=classification,
    )


def autocorrelation(series: Sequence[float]) -> np.ndarray:
    """FFT 기반 정규화 자기상관 (lag 0 => 1)"""
    x = np.asarray(series, dtype=np.float64)
    x = x - np.mean(x)
    n = len(x)
    size = 1 << (2 * n - 1).bit_length()
    spectrum = np.fft.rfft(x, size)
    acf = np.fft.irfft(spectrum * np.conj(spectrum), size)[:n]
    if acf[0] == 0.0:
        return np.zeros(n)
    return acf / acf[0]


def autocorrelation_period(
    series: Sequence[float], params: AnalysisParams, sample_stride: int = 1
) -> float:
    """첫 zero crossing 이후 첫 autocorrelation peak의 lag, 없으면 nan"""
    window, _ = analysis_window(series, params)
    return _acf_period(window) * sample_stride


def _acf_period(window: np.ndarray) -> float:
    acf = autocorrelation(window)

    negative = np.nonzero(acf < 0)[0]
    if len(negative) == 0:
        return math.nan
    start = int(negative[0])

    peaks, _ = find_peaks(acf[start:])
    if len(peaks) == 0:
        return math.nan
    return float(start + peaks[0])


def total_variation(series: Sequence[float]) -> float:
    arr = np.asarray(series, dtype=np.float64)
    if len(arr) < 2:
        return 0.0
    return float(np.sum(np.abs(np.diff(arr))))


def classify_channels(
    record: TimeSeriesRecord, params: AnalysisParams
) -> Dict[str, PeriodEstimate]:
    """record의 모든 채널 분류"""
    results = {}
    for name in record.channel_names:
        try:
            results[name] = estimate_period(
                record.channels[name], params, record.sample_stride
            )
        except SeriesTooShortError as e:
            logger.warning(f"채널 {name} 분석 생략: {e.message}")
            results[name] = PeriodEstimate(
                math.nan, 0.0, 0, Classification.UNDETERMINED
            )
    return results


def is_strictly_decreasing(rows: Sequence[SweepRow]) -> bool:
    """epsilon 오름차순 정렬 기준 주기가 엄격히 감소하는지"""
    ordered = sorted(rows, key=lambda r: r.epsilon)
    periods = [r.estimate.period_steps for r in ordered]
    if any(math.isnan(p) for p in periods):
        return False
    return all(a > b for a, b in zip(periods, periods[1:]))


def period_law(
    rows: Sequence[SweepRow], small_epsilon_max: float = 0.02
) -> List[Dict[str, float]]:
    """
    period * epsilon 과 약결합 구간 평균 대비 상대 편차

    주기가 1/epsilon에 비례하면 product가 일정 => 강결합에서의 비선형성은 편차로만 보고
    """
    reference: Optional[float] = None
    small = [
        r.period_times_epsilon
        for r in rows
        if r.epsilon <= small_epsilon_max and r.estimate.has_period
    ]
    if small:
        reference = float(np.mean(small))

    table = []
    for row in rows:
        product = row.period_times_epsilon
        deviation = math.nan
        if reference and not math.isnan(product):
            deviation = (product - reference) / reference
        table.append(
            {
                "epsilon": row.epsilon,
                "period_steps": row.estimate.period_steps,
                "period_times_epsilon": product,
                "relative_deviation": deviation,
            }
        )
    return table
