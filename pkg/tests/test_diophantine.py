"""Power-gap enumeration and the cycle identity chain."""

import random

import pytest
from hypothesis import given, strategies as st

from collatz_lab import (
    Cycle,
    MinNormalCycle,
    NotOnCycleError,
    NotStandardMapError,
    STANDARD,
    THREE_N_MINUS_ONE,
    case_identity_gap,
    case_offset,
    catalan_check,
    decompose,
    divides,
    enumerate_pow_gap,
    min_normalize,
    power_gap_residual,
    replay_theorem,
    scaled_identity_gap,
)
from oracles import brute_force_pow_gap


class TestEnumeratePowGap:
    def test_gap_one(self):
        assert enumerate_pow_gap(1, 40, 40).solutions == ((0, 1), (1, 2))

    def test_gap_five_has_two_solutions(self):
        assert enumerate_pow_gap(5, 40, 40).solutions == ((1, 3), (3, 5))

    def test_negative_gap(self):
        assert enumerate_pow_gap(-1, 10, 10).solutions == ((1, 1), (2, 3))

    def test_rejects_negative_bounds(self):
        with pytest.raises(ValueError):
            enumerate_pow_gap(1, -1, 10)

    def test_ascending_by_x(self):
        sols = enumerate_pow_gap(5, 40, 40).solutions
        assert list(sols) == sorted(sols)

    def test_exhaustive_against_brute_force(self):
        rng = random.Random(11)
        targets = [rng.randint(-(10**6), 10**6) for _ in range(25)] + [0, 1, -1, 5]
        for c in targets:
            got = list(enumerate_pow_gap(c, 40, 40).solutions)
            assert got == brute_force_pow_gap(c, 40, 40), c

    @given(st.integers(min_value=-(10**9), max_value=10**9))
    def test_solutions_satisfy_equation(self, c):
        for x, y in enumerate_pow_gap(c, 60, 60).solutions:
            assert 2**y - 3**x == c


class TestCatalanCheck:
    def test_desk_scale(self):
        sols = catalan_check(60, 60)
        assert sols.solutions == ((0, 1), (1, 2))
        assert sols.restrict_x(1) == ((1, 2),)

    def test_minimal_bounds(self):
        assert catalan_check(1, 2).solutions == ((0, 1), (1, 2))

    def test_zero_bounds_empty(self):
        assert catalan_check(0, 0).solutions == ()

    @pytest.mark.parametrize("bound", [10, 100, 1000])
    def test_never_more_than_the_known_pairs(self, bound):
        assert set(catalan_check(bound, bound).solutions) <= {(0, 1), (1, 2)}


class TestIdentityEvaluators:
    def test_probe_tuple(self):
        # (k=1, z0=3, z1=5): residual (2*3-5) + 1*(9-10) = 0
        assert power_gap_residual(1, 3, 5) == 0

    def test_case_offset(self):
        assert case_offset(3, 5) == 1

    def test_divides_conventions(self):
        assert divides(0, 0)
        assert not divides(0, 3)
        assert divides(3, 9)
        assert not divides(3, 10)

    @given(
        st.integers(min_value=-(10**9), max_value=10**9),
        st.integers(min_value=-(10**9), max_value=10**9),
        st.integers(min_value=-(10**9), max_value=10**9),
    )
    def test_residual_equals_case_identity_under_substitution(self, k, z0, z1):
        n = case_offset(z0, z1)
        assert power_gap_residual(k, z0, z1) == case_identity_gap(k, z0, n)

    def test_residual_case_agreement_bulk(self):
        rng = random.Random(3)
        for _ in range(10_000):
            k, z0, z1 = (rng.randint(-(10**6), 10**6) for _ in range(3))
            assert power_gap_residual(k, z0, z1) == case_identity_gap(k, z0, case_offset(z0, z1))

    @given(
        st.integers(min_value=0, max_value=60),
        st.integers(min_value=0, max_value=60),
        st.integers(min_value=1, max_value=10**6),
        st.integers(min_value=-(10**9), max_value=10**9),
    )
    def test_scaled_identity_is_the_signature_identity(self, x, y, m, z):
        # 3^x + z/m = 2^y (cross-multiplied) says exactly m*(2^y - 3^x) = z
        assert (scaled_identity_gap(x, y, m, z) == 0) == (m * ((1 << y) - 3**x) == z)


class TestReplayTheorem:
    def test_trivial_cycle(self):
        mc = min_normalize(Cycle((1, 4, 2), STANDARD))
        rep = replay_theorem(mc)
        assert rep.k == 0
        assert rep.x == 1
        assert rep.y == 2
        assert rep.z0 == 1
        assert rep.trivial_cycle_flag
        assert rep.z1 is None and rep.n_case is None
        assert rep.scaled_identity_min
        assert rep.z0_equals_min
        assert rep.power_identity  # 3^1 + 1 == 2^2
        assert rep.scaled_identity_third is None
        evaluated = dict(rep.line_verdicts())
        assert evaluated == {
            "scaled_identity_min": True,
            "z0_equals_min": True,
            "power_identity": True,
        }

    def test_rejects_non_standard_map(self):
        mc = min_normalize(Cycle((5, 14, 7, 20, 10), THREE_N_MINUS_ONE))
        with pytest.raises(NotStandardMapError):
            replay_theorem(mc)

    def test_synthetic_non_cycle_fails_in_decomposition(self):
        fake = MinNormalCycle((7, 22, 11), STANDARD, 3)
        with pytest.raises(NotOnCycleError) as exc:
            replay_theorem(fake)
        assert exc.value.witness == 1

    def test_scaled_identity_matches_signature_for_min(self):
        sig = decompose(1, STANDARD)
        assert scaled_identity_gap(sig.x, sig.y, sig.m, sig.z) == 0
        assert sig.identity_gap() == 0
