"""Harmonic-sum upper bounds on achievable term counts.

The operational bound is the exact suffix window: the longest run
1/n + ... + 1/hi that does not exceed the target.  Its length bounds the term
count of any solution, because any k distinct denominators <= hi have
reciprocal sum at least 1/(hi-k+1) + ... + 1/hi.

harmonic_log_check() additionally certifies the classical two-sided estimate
log n + 1/n < H_n < log n + 1 using rational brackets of log n (atanh series
with an explicit tail bound), so no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ONE = Fraction(1)


@dataclass
class BoundReport:
    hi: int
    window_start: int
    max_terms: int
    window_sum: Fraction

    def to_json(self) -> dict:
        from .arith import format_rational

        return {
            "hi": self.hi,
            "window_start": self.window_start,
            "max_terms": self.max_terms,
            "window_sum": format_rational(self.window_sum),
        }


def harmonic_window(hi: int, target: Fraction = ONE) -> BoundReport:
    """Maximal-length suffix window 1/n + ... + 1/hi with sum <= target,
    by exact backward accumulation."""
    if hi < 2:
        raise ValueError("hi must be >= 2")
    if target <= 0:
        raise ValueError("target must be positive")
    if target < Fraction(1, hi):
        raise ValueError(f"target {target} below 1/{hi}: empty window")
    total = Fraction(0)
    n = hi
    while n >= 1 and total + Fraction(1, n) <= target:
        total += Fraction(1, n)
        n -= 1
    start = n + 1
    return BoundReport(hi=hi, window_start=start, max_terms=hi - start + 1, window_sum=total)


def _atanh_bracket(x: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    """Rational (lo, hi) bracket of atanh(x) for 0 < x < 1.

    Partial sum of x^(2k+1)/(2k+1) underestimates; the tail after `terms`
    terms is below x^(2*terms+1) / ((2*terms+1) * (1 - x^2)).
    """
    s = Fraction(0)
    xx = x * x
    power = x
    for k in range(terms):
        s += power / (2 * k + 1)
        power *= xx
    tail = power / ((2 * terms + 1) * (1 - xx))
    return s, s + tail


def log_bracket(n: int, terms: int = 24) -> tuple[Fraction, Fraction]:
    """Rational (lo, hi) with lo < log n < hi.

    Reduces to log n = m*log 2 + log t with t = n/2^m in [1, 2), so both
    atanh arguments are at most 1/3 and the series converges fast.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return Fraction(0), Fraction(0)
    m = n.bit_length() - 1
    t = Fraction(n, 1 << m)  # in [1, 2)
    log2_lo, log2_hi = _atanh_bracket(Fraction(1, 3), terms)
    log2_lo, log2_hi = 2 * log2_lo, 2 * log2_hi
    x = (t - 1) / (t + 1)  # in [0, 1/3)
    if x == 0:
        t_lo = t_hi = Fraction(0)
    else:
        t_lo, t_hi = _atanh_bracket(x, terms)
        t_lo, t_hi = 2 * t_lo, 2 * t_hi
    return m * log2_lo + t_lo, m * log2_hi + t_hi


def harmonic_number(n: int) -> Fraction:
    """Exact H_n."""
    total = Fraction(0)
    for i in range(1, n + 1):
        total += Fraction(1, i)
    return total


def harmonic_log_check(n: int, terms: int = 24) -> bool:
    """Certify log n + 1/n < H_n < log n + 1 with rational log brackets.

    Returns True only when the bracket proves both inequalities; widen
    `terms` if a bracket is too loose (not needed for n <= 10^6).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    h = harmonic_number(n)
    lo, hi = log_bracket(n, terms)
    return hi + Fraction(1, n) < h and h < lo + 1
