"""
결과 파일 출력

- 시계열 CSV: step,<채널...>
- 분석 CSV: 채널별 분류 결과
- 주기 CSV: epsilon sweep 결과
- report.txt, plot_results.py
시계열/분석 숫자는 %.17g (왕복 시 비트 단위 동일), LF 줄바꿈
주기 CSV 실수는 최단 왕복 표현 (0.05 => "0.05")
"""

import logging
import math
from pathlib import Path
from typing import Dict, List, Sequence, Union

import pandas as pd

from app.models.domain import RunReport, SweepRow, TimeSeriesRecord

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"
PERIODS_COLUMNS = [
    "epsilon",
    "period_steps",
    "cv",
    "n_peaks",
    "classification",
    "period_times_epsilon",
]

PathLike = Union[str, Path]


def _write_frame(df: pd.DataFrame, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(
        path,
        index=False,
        float_format=FLOAT_FORMAT,
        lineterminator="\n",
        na_rep="nan",
    )
    return path


def emit_timeseries_csv(record: TimeSeriesRecord, path: PathLike) -> Path:
    columns = {"step": pd.Series(record.steps, dtype="int64")}
    for name in record.channel_names:
        columns[name] = pd.Series(record.channels[name], dtype="float64")
    df = pd.DataFrame(columns, columns=["step"] + record.channel_names)

    written = _write_frame(df, path)
    logger.debug(f"시계열 CSV 저장: {written} ({len(record)} rows)")
    return written


def read_timeseries_csv(path: PathLike) -> TimeSeriesRecord:
    """emit_timeseries_csv 출력 => TimeSeriesRecord (값 비트 단위 복원)"""
    df = pd.read_csv(path, float_precision="round_trip")
    channels = {
        name: [float(v) for v in df[name].astype("float64")]
        for name in df.columns
        if name != "step"
    }
    steps = [int(v) for v in df["step"]]
    stride = steps[1] - steps[0] if len(steps) > 1 else 1
    return TimeSeriesRecord(steps=steps, channels=channels, sample_stride=stride)


def emit_analysis_csv(report: RunReport, path: PathLike) -> Path:
    rows = []
    for name, summary in report.channels.items():
        estimate = summary.estimate
        rows.append(
            {
                "channel": name,
                "classification": estimate.classification.value,
                "period_steps": estimate.period_steps,
                "cv": estimate.cv,
                "n_peaks": estimate.n_peaks,
                "minimum": summary.minimum,
                "maximum": summary.maximum,
                "window_total_variation": summary.window_total_variation,
            }
        )
    df = pd.DataFrame(
        rows,
        columns=[
            "channel",
            "classification",
            "period_steps",
            "cv",
            "n_peaks",
            "minimum",
            "maximum",
            "window_total_variation",
        ],
    )
    return _write_frame(df, path)


def _shortest(value: float) -> str:
    """float 최단 왕복 표현, 정수 값은 소수점 없이"""
    if math.isnan(value):
        return "nan"
    return repr(float(value)).removesuffix(".0")


def emit_periods_csv(rows: Sequence[SweepRow], path: PathLike) -> Path:
    df = pd.DataFrame(
        [
            {
                "epsilon": _shortest(row.epsilon),
                "period_steps": _shortest(row.estimate.period_steps),
                "cv": _shortest(row.estimate.cv),
                "n_peaks": row.estimate.n_peaks,
                "classification": row.estimate.classification.value,
                "period_times_epsilon": _shortest(row.period_times_epsilon),
            }
            for row in rows
        ],
        columns=PERIODS_COLUMNS,
    )
    written = _write_frame(df, path)
    logger.debug(f"주기 CSV 저장: {written} ({len(rows)} rows)")
    return written


def _fmt(value: float) -> str:
    return "nan" if math.isnan(value) else repr(float(value))


def write_report(report: RunReport, path: PathLike) -> Path:
    lines: List[str] = ["# run report", ""]

    lines.append("[config]")
    for section, values in report.config.items():
        if isinstance(values, dict):
            for key, value in values.items():
                lines.append(f"{section}.{key} = {value}")
        else:
            lines.append(f"{section} = {values}")
    lines.append("")

    lines.append("[run]")
    lines.append(f"wall_time_s = {report.wall_time_s:.3f}")
    lines.append(f"max_norm_error = {_fmt(report.max_norm_error)}")
    lines.append("")

    if report.channels:
        lines.append("[channels]")
        for name, summary in report.channels.items():
            est = summary.estimate
            lines.append(
                f"{name}: {est.classification.value} period_steps={_fmt(est.period_steps)} "
                f"cv={_fmt(est.cv)} n_peaks={est.n_peaks} "
                f"total_variation={_fmt(summary.window_total_variation)}"
            )
        lines.append("")

    if report.sweep_rows:
        lines.append("[sweep]")
        for row in report.sweep_rows:
            line = (
                f"eps={_fmt(row.epsilon)}: {row.estimate.classification.value} "
                f"period_steps={_fmt(row.estimate.period_steps)} "
                f"period_times_epsilon={_fmt(row.period_times_epsilon)}"
            )
            if row.error:
                line += f" error={row.error}"
            lines.append(line)
        lines.append("")

    if report.notes:
        lines.append("[notes]")
        lines.extend(report.notes)
        lines.append("")

    if report.files:
        lines.append("[files]")
        for kind, file_path in report.files.items():
            lines.append(f"{kind} = {file_path}")
        lines.append("")

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines), encoding="utf-8", newline="\n")
    return path


_PLOT_TEMPLATE = '''"""CSV 결과 시각화 (matplotlib 필요)"""

import matplotlib.pyplot as plt
import pandas as pd

FILES = {files!r}


def plot_timeseries(path):
    df = pd.read_csv(path, float_precision="round_trip")
    channels = [c for c in df.columns if c != "step"]
    fig, axes = plt.subplots(len(channels), 1, sharex=True, squeeze=False)
    for ax, name in zip(axes[:, 0], channels):
        ax.plot(df["step"], df[name], linewidth=0.6)
        ax.set_ylabel(name)
    axes[-1, 0].set_xlabel("time step")
    fig.tight_layout()
    fig.savefig(str(path).replace(".csv", ".png"), dpi=150)


def plot_periods(path):
    df = pd.read_csv(path)
    fig, ax = plt.subplots()
    ax.plot(df["epsilon"], df["period_steps"], marker="o")
    ax.set_xlabel("epsilon")
    ax.set_ylabel("period (time steps)")
    fig.tight_layout()
    fig.savefig(str(path).replace(".csv", ".png"), dpi=150)


if __name__ == "__main__":
    if "timeseries" in FILES:
        plot_timeseries(FILES["timeseries"])
    if "periods" in FILES:
        plot_periods(FILES["periods"])
    plt.show()
'''


def write_plot_script(files: Dict[str, str], path: PathLike) -> Path:
    """CSV 경로를 참조하는 matplotlib 스크립트 생성 (패키지는 matplotlib을 import하지 않음)"""
    csv_files = {k: v for k, v in files.items() if str(v).endswith(".csv")}
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(_PLOT_TEMPLATE.format(files=csv_files), encoding="utf-8", newline="\n")
    return path
