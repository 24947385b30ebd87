"""Splitting a unit fraction into 2, 3, or k distinct unit fractions.

two_term_splits is complete: 1/n = 1/x + 1/y with x < y forces
(x - n)(y - n) = n^2, so every split comes from a divisor d of n^2 with d < n
via (x, y) = (n + d, n + n^2/d).  The product-form recipe
(x, y) = (b(a+b), a(a+b)) for n = a*b generates only a subset of these.

The LCM trick scales 1/n by a sum of divisors of n; it is constructive but
not complete either (1/9 = 1/14 + 1/35 + 1/90 is unreachable).  Full k-term
enumeration reuses the pruned exhaustive search engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .solver import SearchSpec, solve


@dataclass(frozen=True)
class SplitRequest:
    n: int  # split 1/n
    terms: int = 2
    cap: int = 0  # max denominator; 0 = unbounded (two-term only)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.terms < 2:
            raise ValueError("terms must be >= 2")


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def two_term_splits(req: SplitRequest) -> list[tuple[int, int]]:
    """All (x, y) with 1/n = 1/x + 1/y, x < y, and y <= cap when cap > 0."""
    n, cap = req.n, req.cap
    out = []
    for d in _divisors(n * n):
        if d >= n:
            break  # d = n would give x = y = 2n
        x, y = n + d, n + n * n // d
        if cap and y > cap:
            continue
        out.append((x, y))
    return sorted(out)


def product_form_split(a: int, b: int) -> tuple[int, int]:
    """The factor recipe for n = a*b: 1/(ab) = 1/(b(a+b)) + 1/(a(a+b)).
    Kept as a cross-check; two_term_splits is the complete enumeration."""
    if a < 1 or b < 1:
        raise ValueError("factors must be positive")
    x, y = b * (a + b), a * (a + b)
    return (x, y) if x < y else (y, x)


def lcm_three_term_split(n: int, parts: tuple[int, int, int]) -> tuple[int, int, int]:
    """1/n = sum of 1/(n(a+b+c)/p) over p in (a, b, c), for distinct divisors
    a, b, c of n.  Result sorted ascending."""
    if len(parts) != 3 or len(set(parts)) != 3:
        raise ValueError("parts must be three distinct integers")
    s = sum(parts)
    out = []
    for p in parts:
        if p < 1 or n % p != 0:
            raise ValueError(f"{p} does not divide {n}")
        out.append(n * s // p)
    return tuple(sorted(out))


def k_term_splits(req: SplitRequest) -> list[tuple[int, ...]]:
    """ALL sets of `terms` distinct denominators <= cap with reciprocal sum
    exactly 1/n.  Denominators necessarily exceed n, so the search range is
    [n+1, cap]; the solver's sieve and windows keep this exhaustive."""
    if req.cap <= 0:
        raise ValueError("k_term_splits needs a positive cap")
    if req.n + 1 > req.cap:
        return []
    spec = SearchSpec(lo=req.n + 1, hi=req.cap, k=req.terms, target=Fraction(1, req.n))
    return solve(spec).solutions
