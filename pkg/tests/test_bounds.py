"""Harmonic window bound and the certified log sandwich."""

from fractions import Fraction

import pytest

from ufmax.bounds import (
    harmonic_log_check,
    harmonic_number,
    harmonic_window,
    log_bracket,
)


def test_window_at_99():
    rep = harmonic_window(99)
    assert rep.window_start == 38
    assert rep.max_terms == 62
    assert rep.window_sum <= 1
    # one more term tips it over
    assert rep.window_sum + Fraction(1, 37) > 1


def test_window_at_6():
    rep = harmonic_window(6)
    assert rep.window_start == 3
    assert rep.max_terms == 4
    assert rep.window_sum == Fraction(19, 20)


def test_window_small_target_errors():
    with pytest.raises(ValueError):
        harmonic_window(10, Fraction(1, 100))
    with pytest.raises(ValueError):
        harmonic_window(1)


def test_window_invariant_sweep():
    for hi in range(2, 400):
        rep = harmonic_window(hi)
        assert rep.window_sum <= 1
        if rep.window_start > 1:
            assert 1 < rep.window_sum + Fraction(1, rep.window_start - 1)
        assert rep.max_terms == hi - rep.window_start + 1


def test_window_nontrivial_target():
    rep = harmonic_window(99, Fraction(1, 9))
    assert rep.window_sum <= Fraction(1, 9) < rep.window_sum + Fraction(1, rep.window_start - 1)


def test_harmonic_number():
    assert harmonic_number(10) == Fraction(7381, 2520)


def test_log_bracket_is_a_bracket():
    # e < 3 gives integer anchors: log 2 in (0.69, 0.70), log 8 = 3 log 2
    lo, hi = log_bracket(2)
    assert Fraction(69, 100) < lo < hi < Fraction(70, 100)
    lo8, hi8 = log_bracket(8)
    assert lo8 <= 3 * hi and 3 * lo <= hi8


@pytest.mark.parametrize("n", [2, 10, 99, 1000])
def test_harmonic_log_check(n):
    assert harmonic_log_check(n)
