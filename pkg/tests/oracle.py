"""Independent brute-force oracles for the test suite.

Deliberately different algorithms from the package under test: exhaustive
meet-in-the-middle subset enumeration (no sieve, no feasibility pruning) for
exact-sum solutions, and a plain pair scan for two-term splits.  Expected
values asserted elsewhere were computed with these.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm


def _enumerate_half(ws: list[int]) -> list[tuple[int, int]]:
    """All (sum, bitmask) pairs over subsets of ws, by doubling."""
    out = [(0, 0)]
    for i, w in enumerate(ws):
        bit = 1 << i
        out += [(s + w, m | bit) for s, m in out]
    return out


@lru_cache(maxsize=None)
def exhaustive_solutions(lo: int, hi: int, target: Fraction = Fraction(1)) -> dict[int, list[tuple[int, ...]]]:
    """Every subset of [lo, hi] with reciprocal sum exactly `target`, grouped
    by subset size.  Meet in the middle over the full, unsieved range."""
    dens = list(range(lo, hi + 1))
    L = lcm(*dens)
    t = target * L
    if t.denominator != 1:
        return {}
    T = t.numerator
    ws = [L // d for d in dens]
    cut = len(dens) // 2
    left, right = ws[:cut], ws[cut:]

    by_sum: dict[int, list[int]] = {}
    for s, m in _enumerate_half(left):
        by_sum.setdefault(s, []).append(m)

    found: dict[int, list[tuple[int, ...]]] = {}
    for s, m in _enumerate_half(right):
        for lm in by_sum.get(T - s, ()):
            sol = tuple(
                dens[i] for i in range(len(dens))
                if (lm >> i) & 1 or (i >= cut and (m >> (i - cut)) & 1)
            )
            if sol:
                found.setdefault(len(sol), []).append(sol)
    return {k: sorted(v) for k, v in sorted(found.items())}


def brute_two_term(n: int, max_y: int = 10_000) -> list[tuple[int, int]]:
    """All x < y <= max_y with 1/x + 1/y == 1/n, by direct scan over x."""
    out = []
    for x in range(n + 1, max_y + 1):
        num, den = n * x, x - n  # y = nx / (x - n)
        if den <= 0 or num % den:
            continue
        y = num // den
        if x < y <= max_y:
            out.append((x, y))
    return sorted(out)


def brute_k_term(n: int, k: int, cap: int) -> list[tuple[int, ...]]:
    """All k-sets of distinct denominators <= cap summing to 1/n, by plain
    recursive enumeration with exact fractions."""
    target = Fraction(1, n)
    out = []

    def rec(start: int, left: int, acc: Fraction, chosen: tuple):
        if left == 0:
            if acc == target:
                out.append(chosen)
            return
        for d in range(start, cap + 1):
            rec(d + 1, left - 1, acc + Fraction(1, d), chosen + (d,))

    rec(n + 1, k, Fraction(0), ())
    return sorted(out)
