from fractions import Fraction

import numpy as np
import pytest

from rllshift import markov, measure, words
from rllshift.markov import (
    RunState,
    build_chain,
    chain_period,
    digit_mass,
    empirical_local_dimension,
    is_irreducible,
    path_measure,
    sample,
    stationary,
)

P13 = Fraction(1, 3)


class TestChain:
    def test_state_space(self):
        chain = build_chain(3, P13)
        assert len(chain.states) == 4
        chain5 = build_chain(5, P13)
        assert len(chain5.states) == 8

    def test_forced_transition(self):
        chain = build_chain(3, P13)
        (entry,) = chain.kernel[RunState(0, 2)]
        assert entry == (1, RunState(1, 1), 1)

    def test_free_transition_m4(self):
        chain = build_chain(4, P13)
        step = {d: (nxt, prob) for d, nxt, prob in chain.kernel[RunState(0, 2)]}
        assert step[0] == (RunState(0, 3), P13)
        assert step[1] == (RunState(1, 1), 1 - P13)

    def test_rows_sum_to_one(self):
        for m in (3, 4, 5):
            chain = build_chain(m, Fraction(2, 5))
            for st in chain.states:
                assert sum(prob for _, _, prob in chain.kernel[st]) == 1

    def test_irreducible_aperiodic(self):
        for m in (3, 4, 5):
            chain = build_chain(m, P13)
            assert is_irreducible(chain)
            assert chain_period(chain) == 1


class TestPathMeasure:
    def test_examples(self):
        p = P13
        chain = build_chain(3, p)
        assert path_measure(chain, "010") == p * (1 - p) * p
        assert path_measure(chain, "0011") == p * p * (1 - p)  # forced third step
        assert path_measure(chain, "000") == 0
        assert path_measure(chain, "001") == p * p

    @pytest.mark.parametrize("m", [3, 4])
    def test_equals_cylinder_measure(self, m):
        chain = build_chain(m, Fraction(2, 5))
        meas = measure.bernoulli(m, Fraction(2, 5))
        for n in range(1, 11):
            for w in words.enumerate_words(m, n):
                assert path_measure(chain, w) == measure.mu_closed(meas, w).value


class TestStationary:
    @pytest.mark.parametrize("m", [3, 4, 5])
    @pytest.mark.parametrize("p", [P13, Fraction(1, 2), Fraction(2, 3)])
    def test_matches_closed_form_exactly(self, m, p):
        pi = stationary(build_chain(m, p))
        assert digit_mass(pi, 0) == measure.lambda0_closed(m, p)
        assert digit_mass(pi, 0) + digit_mass(pi, 1) == 1

    def test_symmetric_case(self):
        pi = stationary(build_chain(4, Fraction(1, 2)))
        assert digit_mass(pi, 0) == Fraction(1, 2)

    def test_m3_hand_solution(self):
        # balance equations for the four-state chain solved by hand
        p = P13
        pi = stationary(build_chain(3, p))
        assert digit_mass(pi, 0) == (1 + p) / 3

    def test_fixed_by_kernel(self):
        chain = build_chain(4, Fraction(2, 5))
        pi = stationary(chain)
        pushed = {st: Fraction(0) for st in chain.states}
        for st, mass in pi.items():
            for _, nxt, prob in chain.kernel[st]:
                pushed[nxt] += mass * Fraction(prob)
        assert pushed == pi


class TestSampling:
    def test_determinism(self):
        chain = build_chain(3, 0.3)
        a = sample(chain, 5000, seed=7)
        b = sample(chain, 5000, seed=7)
        assert np.array_equal(a.bits, b.bits)
        c = sample(chain, 5000, seed=8)
        assert not np.array_equal(a.bits, c.bits)

    def test_samples_are_admissible(self):
        for m in (3, 4):
            chain = build_chain(m, 0.3)
            run = sample(chain, 20_000, seed=1)
            assert words.max_run(run.word) < m

    def test_frequency_symmetric_case(self):
        chain = build_chain(3, 0.5)
        run = sample(chain, 200_000, seed=11)
        assert abs(run.freq0() - 0.5) < 0.005

    def test_frequency_series_shape(self):
        run = sample(build_chain(3, 0.5), 100, seed=0)
        series = run.frequency_series()
        assert len(series) == 100
        assert series[-1] == run.freq0()


class TestLocalDimension:
    def test_nonnegative(self):
        run = sample(build_chain(3, 0.4), 10_000, seed=3)
        series = empirical_local_dimension(run, 0.4)
        assert np.all(series >= 0)

    def test_symmetric_case_dominates_bound(self):
        run = sample(build_chain(3, 0.5), 100_000, seed=5)
        series = empirical_local_dimension(run, 0.5)
        assert series[-1] >= 0.5 - 0.01

    def test_forced_positions_contribute_nothing(self):
        # every third symbol of 010011... style maximal runs is forced
        run = markov.SampleRun(3, 0.5, 0, 4, np.array([0, 0, 1, 1], dtype=np.uint8))
        inc = markov.log_measure_increments(run, 0.5)
        assert inc[2] == 0.0  # "00" forces the 1
        assert inc[0] == inc[1] == inc[3] == pytest.approx(np.log(2))

    def test_bad_q_rejected(self):
        run = sample(build_chain(3, 0.5), 10, seed=0)
        with pytest.raises(ValueError):
            empirical_local_dimension(run, 1.0)
