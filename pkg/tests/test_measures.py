import numpy as np
import pytest

from thermal_jc import (
    InvalidStateError,
    ModelParams,
    XState,
    atomic_xstate,
    concurrence_general,
    concurrence_xstate,
    discord_1norm_xstate,
)

from helpers import random_xstate

BELL = XState(a=0.5, b=0.0, c=0.0, d=0.5, w=0.5, z=0.0)
# vacuum-evolved state at gt = pi/4: populations (1/8, 1/8, 1/8, 5/8), w = 1/4
VACUUM_QUARTER = XState(a=0.125, b=0.125, c=0.125, d=0.625, w=0.25, z=0.0)


class TestDiscord:
    def test_bell_state_scores_one(self):
        assert discord_1norm_xstate(BELL) == pytest.approx(1.0, abs=1e-15)

    def test_vacuum_quarter_period(self):
        # cos^2(pi/4) = 1/2 in the doubled normalization
        assert discord_1norm_xstate(VACUUM_QUARTER) == pytest.approx(0.5, abs=1e-15)

    def test_product_state_scores_zero(self):
        assert discord_1norm_xstate(XState(a=1.0, b=0.0, c=0.0, d=0.0)) == 0.0

    def test_classical_mixture_scores_zero(self):
        assert discord_1norm_xstate(XState(a=0.5, b=0.0, c=0.0, d=0.5)) == 0.0

    def test_degenerate_branch_matches_two_abs_w(self, rng):
        # real w, z = 0 forces t11^2 = t22^2, where the value is exactly 2|w|
        for _ in range(200):
            s = random_xstate(rng)
            s = XState(a=s.a, b=s.b, c=s.c, d=s.d, w=abs(s.w), z=0.0)
            assert discord_1norm_xstate(s) == pytest.approx(2.0 * abs(s.w), abs=1e-13)

    def test_model_states_in_unit_interval(self, rng):
        for _ in range(50):
            p = ModelParams(rng.uniform(0, 2), rng.uniform(0, 2))
            s = atomic_xstate(p, rng.uniform(0, 4 * np.pi))
            assert 0.0 <= discord_1norm_xstate(s) <= 1.0 + 1e-12

    def test_rejects_invalid_state(self):
        with pytest.raises(InvalidStateError):
            discord_1norm_xstate(XState(a=0.9, b=0.0, c=0.0, d=0.3))


class TestConcurrence:
    def test_bell_state(self):
        assert concurrence_xstate(BELL) == pytest.approx(1.0, abs=1e-15)
        assert concurrence_general(BELL.to_matrix()) == pytest.approx(1.0, abs=1e-12)

    def test_maximally_mixed(self):
        assert concurrence_general(np.eye(4, dtype=complex) / 4.0) == 0.0
        assert concurrence_xstate(XState(a=0.25, b=0.25, c=0.25, d=0.25)) == 0.0

    def test_vacuum_quarter_period(self):
        # cos^4(pi/4) = 1/4
        assert concurrence_xstate(VACUUM_QUARTER) == pytest.approx(0.25, abs=1e-15)
        assert concurrence_general(VACUUM_QUARTER.to_matrix()) == pytest.approx(0.25, abs=1e-12)

    def test_xstate_formula_matches_general(self, rng):
        worst = 0.0
        for _ in range(2000):
            s = random_xstate(rng)
            worst = max(worst, abs(concurrence_xstate(s) - concurrence_general(s.to_matrix())))
        assert worst < 1e-10

    def test_range_on_random_states(self, rng):
        for _ in range(200):
            s = random_xstate(rng)
            assert 0.0 <= concurrence_xstate(s) <= 1.0 + 1e-12

    def test_general_rejects_nonpositive(self):
        with pytest.raises(InvalidStateError):
            concurrence_general(np.diag([0.6, 0.5, -0.05, -0.05]).astype(complex))
