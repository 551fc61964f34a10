"""
CLI 종료 코드 테스트
"""

from pathlib import Path

import pytest

from app.core.config import EXIT_OK, EXIT_RUNTIME_ERROR, EXIT_VALIDATION_ERROR
from app.main import main

SMALL_CONFIG = """
# CLI 테스트용 소형 설정
lattice.width = 6
lattice.height = 6
steps = 60
model.epsilon = 0.05
model.variant = Threshold
probes.single_sites = 1,1
probes.pairs = 1,1|4,4
"""


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "exp.cfg"
    path.write_text(SMALL_CONFIG, encoding="utf-8")
    return path


@pytest.mark.integration
class TestMain:
    """qlattice CLI 테스트"""

    def test_run_success(self, config_file, tmp_path):
        out = tmp_path / "out"

        code = main(["run", "--config", str(config_file), "--output-dir", str(out)])

        assert code == EXIT_OK
        assert (out / "timeseries.csv").exists()
        assert (out / "report.txt").exists()

    def test_set_and_seed(self, config_file, tmp_path):
        out = tmp_path / "out"

        code = main(
            [
                "run",
                "--config",
                str(config_file),
                "--set",
                "init.interior=RandomUnitCircle",
                "--set",
                "steps=10",
                "--seed",
                "42",
                "--output-dir",
                str(out),
            ]
        )

        assert code == EXIT_OK
        report = (out / "report.txt").read_text()
        assert "init.seed = 42" in report
        assert "steps = 10" in report

    def test_plot_script_flag(self, config_file, tmp_path):
        out = tmp_path / "out"

        code = main(
            ["run", "--config", str(config_file), "--output-dir", str(out), "--plot-script"]
        )

        assert code == EXIT_OK
        assert (out / "plot_results.py").exists()

    def test_sweep(self, config_file, tmp_path):
        out = tmp_path / "out"

        code = main(
            [
                "sweep",
                "--config",
                str(config_file),
                "--epsilons",
                "0.05,0.1",
                "--output-dir",
                str(out),
            ]
        )

        assert code == EXIT_OK
        lines = (out / "periods.csv").read_text().splitlines()
        assert len(lines) == 3

    def test_invalid_value_exit_1(self, config_file, tmp_path):
        code = main(
            [
                "run",
                "--config",
                str(config_file),
                "--set",
                "model.epsilon=-1",
                "--output-dir",
                str(tmp_path),
            ]
        )
        assert code == EXIT_VALIDATION_ERROR

    def test_unknown_key_exit_1(self, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text("preset = Fig3\nmodel.speed = 3\n")

        assert main(["run", "--config", str(path)]) == EXIT_VALIDATION_ERROR

    def test_no_threshold_sweep_exit_1(self, config_file, tmp_path):
        code = main(
            [
                "sweep",
                "--config",
                str(config_file),
                "--set",
                "model.variant=NoThreshold",
                "--epsilons",
                "0.05",
                "--output-dir",
                str(tmp_path),
            ]
        )
        assert code == EXIT_VALIDATION_ERROR

    def test_bad_epsilons_exit_1(self, config_file, tmp_path):
        code = main(
            ["sweep", "--config", str(config_file), "--epsilons", "a,b", "--output-dir", str(tmp_path)]
        )
        assert code == EXIT_VALIDATION_ERROR

    def test_usage_error_exit_1(self):
        assert main(["run", "--preset", "Fig9"]) == EXIT_VALIDATION_ERROR

    def test_missing_config_and_preset_exit_1(self):
        assert main(["run"]) == EXIT_VALIDATION_ERROR

    def test_missing_file_exit_2(self, tmp_path):
        code = main(["run", "--config", str(tmp_path / "nope.cfg")])
        assert code == EXIT_RUNTIME_ERROR

    def test_runtime_error_exit_2(self, config_file, tmp_path, mocker):
        mocker.patch("app.main.run_experiment", side_effect=RuntimeError("disk full"))

        code = main(["run", "--config", str(config_file), "--output-dir", str(tmp_path)])

        assert code == EXIT_RUNTIME_ERROR

    def test_missing_output_exit_2(self, config_file, tmp_path, mocker):
        from app.models.domain import RunReport

        report = RunReport(config={}, files={"timeseries": str(tmp_path / "missing.csv")})
        mocker.patch("app.main.run_experiment", return_value=report)

        code = main(["run", "--config", str(config_file), "--output-dir", str(tmp_path)])

        assert code == EXIT_RUNTIME_ERROR
        assert not Path(tmp_path / "missing.csv").exists()
