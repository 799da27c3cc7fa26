import itertools
from fractions import Fraction

import pytest

from rllshift import words
from rllshift.words import (
    CapacityError,
    SequenceWindow,
    Word,
    complement,
    count_words,
    d2,
    enumerate_words,
    is_admissible,
    lex_compare,
    occurrence_report,
    pi2,
)


def brute_words(m, n):
    """Independent oracle: filter the full product by substring scan."""
    out = []
    for bits in itertools.product("01", repeat=n):
        s = "".join(bits)
        if "0" * m not in s and "1" * m not in s:
            out.append(s)
    return out


def brute_occurrence(m, s):
    """Direct evaluation of the flip-prefix definition."""
    set0, set1 = [], []
    for k in range(1, len(s) + 1):
        prefix = s[: k - 1]
        if s[k - 1] == "0" and words.is_admissible_symbols(m, prefix + "1"):
            set0.append(k)
        if s[k - 1] == "1" and words.is_admissible_symbols(m, prefix + "0"):
            set1.append(k)
    return tuple(set0), tuple(set1)


class TestAdmissibility:
    def test_examples(self):
        assert is_admissible(Word("010", 3))
        assert not is_admissible(Word("0001", 3))
        assert is_admissible(Word("000", 4))

    def test_empty_word_admissible(self):
        assert is_admissible(Word("", 3))

    def test_order_below_three_rejected(self):
        with pytest.raises(ValueError):
            Word("01", 2)

    def test_bad_symbols_rejected(self):
        with pytest.raises(ValueError):
            Word("012", 3)


class TestEnumeration:
    def test_small_sizes(self):
        assert [w.symbols for w in enumerate_words(3, 1)] == ["0", "1"]
        assert len(enumerate_words(3, 3)) == 6
        assert len(enumerate_words(3, 4)) == 10

    @pytest.mark.parametrize("m", [3, 4])
    @pytest.mark.parametrize("n", range(1, 9))
    def test_matches_brute_force_in_lex_order(self, m, n):
        assert [w.symbols for w in enumerate_words(m, n)] == brute_words(m, n)

    def test_capacity_error(self):
        with pytest.raises(CapacityError):
            enumerate_words(3, 40, cap=100)

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_count_matches_enumeration(self, m):
        for n in range(1, 17):
            assert count_words(m, n) == len(enumerate_words(m, n))

    def test_count_examples(self):
        assert count_words(3, 2) == 4
        assert count_words(3, 5) == 16
        assert count_words(4, 3) == 8


class TestOccurrence:
    def test_examples(self):
        r = occurrence_report(Word("010", 3))
        assert (r.n0, r.n1) == (2, 1)
        r = occurrence_report(Word("001", 3))
        assert (r.n0, r.n1) == (2, 0)
        assert 3 not in r.set1  # 000 is forbidden, so position 3 is stuck
        r = occurrence_report(Word("0101", 5))
        assert (r.n0, r.n1) == (2, 2)

    def test_inadmissible_rejected(self):
        with pytest.raises(words.InadmissibleWordError):
            occurrence_report(Word("000", 3))

    @pytest.mark.parametrize("m", [3, 4])
    def test_local_rule_matches_definition(self, m):
        for n in range(1, 11):
            for w in enumerate_words(m, n):
                r = occurrence_report(w)
                assert (r.set0, r.set1) == brute_occurrence(m, w.symbols)

    @pytest.mark.parametrize("m", [3, 4])
    def test_complement_swaps_report(self, m):
        for w in enumerate_words(m, 7):
            r = occurrence_report(w)
            rc = occurrence_report(complement(w))
            assert (rc.set0, rc.n0) == (r.set1, r.n1)
            assert (rc.set1, rc.n1) == (r.set0, r.n0)

    def test_subadditivity_small(self):
        m = 3
        pool = [w.symbols for n in range(1, 6) for w in enumerate_words(m, n)]
        for w in pool:
            for v in pool:
                if not words.is_admissible_symbols(m, w + v):
                    continue
                w0, w1 = words.occurrence_counts(m, w)
                v0, v1 = words.occurrence_counts(m, v)
                c0, c1 = words.occurrence_counts(m, w + v)
                assert w0 + v0 - 1 <= c0 <= w0 + v0
                assert w1 + v1 - 1 <= c1 <= w1 + v1


class TestComplement:
    def test_flip(self):
        assert complement("010") == "101"

    def test_involution_and_admissibility(self):
        for w in enumerate_words(3, 6):
            assert complement(complement(w)) == w
            assert is_admissible(complement(w))

    def test_preserves_window_type(self):
        win = SequenceWindow("0011")
        assert isinstance(complement(win), SequenceWindow)
        assert complement(win).prefix == "1100"


class TestMetricAndProjection:
    def test_d2_examples(self):
        assert d2("01", "11") == words.MetricValue(Fraction(1), True)
        assert d2("0101", "0111") == words.MetricValue(Fraction(1, 4), True)
        assert d2("0101", "0101") == words.MetricValue(Fraction(1, 16), False)

    def test_d2_empty_rejected(self):
        with pytest.raises(ValueError):
            d2("", "0")

    def test_pi2_examples(self):
        assert pi2("1") == Fraction(1, 2)
        assert pi2("011") == Fraction(3, 8)
        assert pi2("000") == 0

    def test_projection_lipschitz(self):
        # |pi2(w) - pi2(v)| <= d2(w, v) whenever d2 is exact
        n = 6
        for a in itertools.product("01", repeat=n):
            for b in itertools.product("01", repeat=n):
                w, v = "".join(a), "".join(b)
                metric = d2(w, v)
                if metric.exact:
                    assert abs(pi2(w) - pi2(v)) <= metric.value

    def test_lex_examples(self):
        assert lex_compare("10", "11") == words.LESS
        assert lex_compare("110", "110") == words.EQUAL_SO_FAR
        assert lex_compare("1101", "1100") == words.GREATER
