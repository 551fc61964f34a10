"""
c-NOT 결합 / 감쇠 / collapse / step 테스트
"""

import math

import numpy as np
import pytest

from app.algorithms.dynamics import (
    collapse_if_threshold,
    coupling_delta,
    decay_delta,
    oracle_step,
    simulate,
    step,
)
from app.algorithms.initialization import init_lattice
from app.algorithms.lattice import neighbors, renormalize
from app.core.config import DEFAULT_EPSILON_GRID
from app.core.exceptions import InvalidParameterError, OracleSizeError
from app.models.domain import LatticeState, Qubit, SiteIndex, StepDelta
from app.models.params import ModelParams, Preset, ThresholdMode, Variant
from app.services.config_parser_service import parse_config
from tests.helpers import random_state


@pytest.mark.unit
class TestCouplingDelta:
    """controller -> target 증분 테스트"""

    def test_ground_controller_does_nothing(self):
        """ground controller => (0, 0)"""
        delta = coupling_delta(Qubit.ground(), Qubit(0.6, 0.8), 0.3)

        assert delta.dc == 0.0 and delta.ds == 0.0

    def test_excited_controller_ground_target(self):
        """(1,0) -> (0,1), eps 0.01 => (-0.01, 0)"""
        delta = coupling_delta(Qubit(1.0, 0.0), Qubit(0.0, 1.0), 0.01)

        assert delta.dc == pytest.approx(-0.01)
        assert delta.ds == 0.0

    def test_excited_controller_excited_target(self):
        """(1,0) -> (1,0), eps 0.01 => (0, 0.01)"""
        delta = coupling_delta(Qubit(1.0, 0.0), Qubit(1.0, 0.0), 0.01)

        assert delta.dc == 0.0
        assert delta.ds == pytest.approx(0.01)

    def test_scaled_rotation(self, rng):
        """target + delta 는 tan(theta) = eps * c 인 회전의 sqrt(1 + a^2) 배"""
        for c_angle, t_angle in rng.uniform(0, 2 * math.pi, size=(50, 2)):
            controller = Qubit(math.sin(c_angle), math.cos(c_angle))
            target = Qubit(math.sin(t_angle), math.cos(t_angle))
            a = 0.1 * controller.c
            delta = coupling_delta(controller, target, 0.1)

            moved = (target.c + delta.dc, target.s + delta.ds)
            assert math.hypot(*moved) == pytest.approx(math.sqrt(1 + a * a))

    def test_delta_addition(self):
        total = StepDelta(0.1, 0.2) + StepDelta(-0.05, 0.3)
        assert total.dc == pytest.approx(0.05)
        assert total.ds == pytest.approx(0.5)


@pytest.mark.unit
class TestDecayDelta:
    """AND.|0> 감쇠 테스트"""

    def test_ground_fixed_point(self):
        delta = decay_delta(Qubit.ground(), 0.5)
        assert delta.dc == 0.0 and delta.ds == 0.0

    def test_excited_pulled(self):
        """(1,0), weight 0.01 => (-0.01, 0)"""
        delta = decay_delta(Qubit(1.0, 0.0), 0.01)

        assert delta.dc == pytest.approx(-0.01)
        assert delta.ds == 0.0

    def test_zero_weight(self):
        delta = decay_delta(Qubit(0.6, 0.8), 0.0)
        assert delta.dc == 0.0 and delta.ds == 0.0


@pytest.mark.unit
class TestCollapse:
    """threshold collapse 테스트"""

    def test_above_threshold_collapses(self, threshold_params):
        """(0.8, 0.6), c_thres 0.7 => (0, 1)"""
        assert collapse_if_threshold(Qubit(0.8, 0.6), threshold_params) == Qubit.ground()

    def test_below_threshold_unchanged(self, threshold_params):
        q = Qubit(0.5, 0.866)
        signed = threshold_params.model_copy(update={"threshold_mode": ThresholdMode.SIGNED})

        assert collapse_if_threshold(q, threshold_params) == q
        assert collapse_if_threshold(q, signed) == q

    def test_negative_c_depends_on_mode(self, threshold_params):
        """(-0.9, 0.436): Magnitude => collapse, Signed => 그대로"""
        q = Qubit(-0.9, 0.436)
        signed = threshold_params.model_copy(update={"threshold_mode": ThresholdMode.SIGNED})

        assert collapse_if_threshold(q, threshold_params) == Qubit.ground()
        assert collapse_if_threshold(q, signed) == q

    def test_equal_to_threshold_collapses(self, threshold_params):
        """경계값은 >= 로 비교"""
        assert collapse_if_threshold(Qubit(0.7, 0.714), threshold_params) == Qubit.ground()

    def test_requires_threshold_variant(self, no_threshold_params):
        with pytest.raises(InvalidParameterError):
            collapse_if_threshold(Qubit(0.8, 0.6), no_threshold_params)


@pytest.mark.unit
class TestStep:
    """동기 갱신 step 테스트"""

    @pytest.mark.parametrize("variant", list(Variant))
    @pytest.mark.parametrize("epsilon", [0.01, 0.1, 0.8])
    def test_ground_fixed_point(self, variant, epsilon):
        """all-ground 격자는 어떤 파라미터에서도 그대로"""
        state = LatticeState.ground(6, 5)
        params = ModelParams(epsilon=epsilon, variant=variant)

        result = step(state, params)

        assert result.equals(state)
        assert result.step_count == 1

    def test_single_excitation(self, no_threshold_params):
        """5x5 중앙만 excited, eps = decay = 0.01"""
        center = SiteIndex(2, 2)
        state = LatticeState.ground(5, 5).with_site(center, Qubit.excited())

        result = step(state, no_threshold_params)

        expected = renormalize(Qubit(-0.01, 1.0))
        for n in neighbors(center, 5, 5):
            q = result.site(n)
            assert q.c == pytest.approx(expected.c, abs=1e-15)
            assert q.s == pytest.approx(expected.s, abs=1e-15)
        assert result.site(center) == Qubit(1.0, 0.0)

        touched = {center, *neighbors(center, 5, 5)}
        for y in range(5):
            for x in range(5):
                if SiteIndex(x, y) not in touched:
                    assert result.site(SiteIndex(x, y)) == Qubit.ground()

    def test_threshold_crossing_collapses_to_ground(self):
        """3x3 중앙이 한 step 만에 |c| >= 0.7 => 정확히 (0, 1)"""
        grid = [[Qubit(1.0, 0.0) for _ in range(3)] for _ in range(3)]
        grid[1][1] = Qubit(-0.6, 0.8)
        state = LatticeState.from_qubits(grid)
        params = ModelParams(epsilon=0.8, variant=Variant.THRESHOLD, c_thres=0.7)

        result = step(state, params)

        assert result.site(SiteIndex(1, 1)) == Qubit(0.0, 1.0)

    def test_signed_mode_keeps_negative_c(self):
        """같은 상황에서 Signed 모드는 collapse 하지 않음"""
        grid = [[Qubit(1.0, 0.0) for _ in range(3)] for _ in range(3)]
        grid[1][1] = Qubit(-0.6, 0.8)
        state = LatticeState.from_qubits(grid)
        params = ModelParams(
            epsilon=0.8,
            variant=Variant.THRESHOLD,
            threshold_mode=ThresholdMode.SIGNED,
        )

        q = step(state, params).site(SiteIndex(1, 1))

        assert q.c < -0.7

    def test_normalization_preserved(self, rng):
        """step 이후 모든 site |c^2 + s^2 - 1| < 1e-12"""
        for variant in Variant:
            params = ModelParams(epsilon=0.2, variant=variant)
            state = random_state(rng, 7, 9)
            for _ in range(50):
                state = step(state, params)
                assert state.max_norm_error() < 1e-12

    def test_input_snapshot_unchanged(self, rng, threshold_params):
        state = random_state(rng, 4, 4)
        before_c, before_s = state.c.copy(), state.s.copy()

        step(state, threshold_params)

        assert np.array_equal(state.c, before_c)
        assert np.array_equal(state.s, before_s)
        assert state.step_count == 0

    def test_deterministic(self, rng, no_threshold_params):
        """같은 입력 => 비트 단위로 같은 출력"""
        state = random_state(rng, 6, 6)
        assert step(state, no_threshold_params).equals(step(state, no_threshold_params))

    def test_rotation_identity(self, rng):
        """decay 0, collapse 없음 => site마다 arctan(eps * sum c_n) 회전"""
        params = ModelParams(epsilon=0.1, variant=Variant.NO_THRESHOLD, decay_weight=0.0)
        state = random_state(rng, 4, 5)

        result = step(state, params)

        for y in range(5):
            for x in range(4):
                idx = SiteIndex(x, y)
                total = sum(state.site(n).c for n in neighbors(idx, 4, 5))
                theta = math.atan(0.1 * total)
                q = state.site(idx)
                expected_c = math.cos(theta) * q.c - math.sin(theta) * q.s
                expected_s = math.sin(theta) * q.c + math.cos(theta) * q.s
                assert result.site(idx).c == pytest.approx(expected_c, abs=1e-12)
                assert result.site(idx).s == pytest.approx(expected_s, abs=1e-12)

    def test_decay_every(self):
        """decay_every = 2 => 홀수 step_count 에서는 감쇠 없음"""
        params = ModelParams(epsilon=0.01, variant=Variant.NO_THRESHOLD, decay_every=2)
        state = LatticeState.ground(3, 3).with_site(SiteIndex(1, 1), Qubit(0.6, 0.8))

        even = step(state, params)
        odd = step(
            LatticeState(3, 3, state.c, state.s, step_count=1), params
        )

        # 이웃이 모두 ground => 감쇠가 없으면 중앙은 변하지 않음
        assert odd.site(SiteIndex(1, 1)).c == pytest.approx(0.6, abs=1e-15)
        assert even.site(SiteIndex(1, 1)).c < 0.6


@pytest.mark.unit
class TestSimulate:
    def test_yields_successive_snapshots(self, threshold_params):
        state = LatticeState.ground(3, 3).with_site(SiteIndex(0, 0), Qubit.excited())
        seen = []

        snapshots = list(simulate(state, threshold_params, 5, on_step=seen.append))

        assert [s.step_count for s in snapshots] == [1, 2, 3, 4, 5]
        assert seen == snapshots
        expected = state
        for _ in range(5):
            expected = step(expected, threshold_params)
        assert snapshots[-1].equals(expected)


@pytest.mark.unit
class TestOracleStep:
    """기준 구현과 벡터화 step 비교"""

    def test_rejects_large_lattice(self, threshold_params):
        with pytest.raises(OracleSizeError):
            oracle_step(LatticeState.ground(9, 4), threshold_params)

    def test_rejects_unknown_order(self, threshold_params):
        with pytest.raises(InvalidParameterError):
            oracle_step(LatticeState.ground(3, 3), threshold_params, site_order="random")

    def test_ground_fixed_point(self, threshold_params):
        state = LatticeState.ground(4, 4)
        assert oracle_step(state, threshold_params).equals(state)

    def test_order_independence(self, rng, no_threshold_params):
        """site 순회 순서를 뒤집어도 결과 동일"""
        for _ in range(20):
            state = random_state(rng, 5, 4)
            forward = oracle_step(state, no_threshold_params, site_order="forward")
            reverse = oracle_step(state, no_threshold_params, site_order="reverse")
            assert forward.equals(reverse)

    def test_matches_step_on_random_states(self, rng):
        """3x3 ~ 6x6, 두 variant, eps 0.01/0.1/0.8 에서 1e-12 이내로 일치"""
        sizes = [(w, h) for w in range(3, 7) for h in range(3, 7)]
        combos = [
            ModelParams(epsilon=eps, variant=variant)
            for variant in Variant
            for eps in (0.01, 0.1, 0.8)
        ]

        for trial in range(1008):
            width, height = sizes[trial % len(sizes)]
            params = combos[trial % len(combos)]
            state = random_state(rng, width, height)

            fast = step(state, params)
            reference = oracle_step(state, params)

            assert fast.step_count == reference.step_count
            assert fast.equals(reference, tol=1e-12), (
                f"trial {trial}: {width}x{height}, {params}"
            )


@pytest.mark.unit
class TestNormNeverVanishes:
    """실험 grid 전체에서 정규화 전 norm 이 0 이 되지 않음"""

    @pytest.mark.parametrize("preset", list(Preset))
    @pytest.mark.parametrize("epsilon", DEFAULT_EPSILON_GRID)
    def test_preset_grid(self, preset, epsilon, rng):
        config = parse_config(f"preset = {preset.value}")
        params = config.model.model_copy(update={"epsilon": epsilon})

        for state in (init_lattice(8, 8, config.init), random_state(rng, 8, 8)):
            # ZeroNormError 가 나면 실패
            for _ in range(200):
                state = step(state, params)

            assert np.max(np.abs(np.hypot(state.c, state.s) - 1.0)) < 1e-12

    @pytest.mark.parametrize("epsilon", DEFAULT_EPSILON_GRID)
    def test_signed_threshold(self, epsilon, rng):
        params = ModelParams(
            epsilon=epsilon,
            variant=Variant.THRESHOLD,
            c_thres=0.7,
            threshold_mode=ThresholdMode.SIGNED,
        )
        state = random_state(rng, 8, 8)

        for _ in range(200):
            state = step(state, params)

        assert np.max(np.abs(np.hypot(state.c, state.s) - 1.0)) < 1e-12
