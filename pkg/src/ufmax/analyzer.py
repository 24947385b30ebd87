"""Structure of a solution set: common core, frequencies, swap relations.

Two equal-size solutions with the same total differ by two disjoint sets of
denominators whose reciprocal sums are forced to be equal; those difference
sets are the "swaps".  Connectivity of the graph with edges for small swaps
is reported per threshold, since "connected through replacement" can be read
pairwise (every solution has a small-swap partner) or transitively.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .arith import format_rational


@dataclass(frozen=True)
class SwapRelation:
    pair: tuple[int, int]  # solution indices, i < j
    only_in_i: tuple[int, ...]
    only_in_j: tuple[int, ...]
    common_value: Fraction

    def to_json(self) -> dict:
        return {
            "pair": list(self.pair),
            "only_in_i": list(self.only_in_i),
            "only_in_j": list(self.only_in_j),
            "common_value": format_rational(self.common_value),
        }


def _recip_sum(dens) -> Fraction:
    total = Fraction(0)
    for d in dens:
        total += Fraction(1, d)
    return total


def common_core(solutions) -> list[int]:
    """Denominators present in every solution."""
    if not solutions:
        raise ValueError("common_core of empty solution list")
    core = set(solutions[0])
    for sol in solutions[1:]:
        core &= set(sol)
    return sorted(core)


def frequency_table(solutions) -> dict[int, int]:
    """How many solutions contain each denominator (only seen ones listed)."""
    counts = Counter()
    for sol in solutions:
        counts.update(sol)
    return dict(sorted(counts.items()))


def swap_edges(solutions) -> list[SwapRelation]:
    """One SwapRelation per unordered solution pair.  For equal-cardinality
    solutions with equal totals the two difference sums must agree; that is
    asserted for every pair."""
    edges = []
    sets = [set(s) for s in solutions]
    for i in range(len(solutions)):
        for j in range(i + 1, len(solutions)):
            only_i = tuple(sorted(sets[i] - sets[j]))
            only_j = tuple(sorted(sets[j] - sets[i]))
            vi, vj = _recip_sum(only_i), _recip_sum(only_j)
            if len(solutions[i]) == len(solutions[j]) and _recip_sum(solutions[i]) == _recip_sum(solutions[j]):
                assert vi == vj, f"swap sums differ for pair ({i}, {j})"
            edges.append(SwapRelation((i, j), only_i, only_j, vi))
    return edges


def _connected(n: int, pairs) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    return n == 0 or len({find(i) for i in range(n)}) == 1


def connectivity_report(solutions, edges=None) -> dict:
    """Per-threshold connectivity of the swap graph, plus each solution's
    nearest-neighbor swap size (minimum difference size over partners)."""
    if edges is None:
        edges = swap_edges(solutions)
    n = len(solutions)
    sizes = {e.pair: max(len(e.only_in_i), len(e.only_in_j)) for e in edges}
    max_size = max(sizes.values(), default=0)
    connectivity_at = {
        t: _connected(n, [p for p, s in sizes.items() if s <= t])
        for t in range(1, max_size + 1)
    }
    nearest = [
        min((s for p, s in sizes.items() if i in p), default=0) for i in range(n)
    ]
    return {
        "connectivity_at": connectivity_at,
        "nearest_neighbor_swap_size": nearest,
        "max_swap_size": max_size,
    }


def analyze(solutions) -> dict:
    """Full analyzer payload: core, frequencies, swaps, connectivity."""
    edges = swap_edges(solutions)
    report = connectivity_report(solutions, edges)
    return {
        "common_core": common_core(solutions),
        "frequencies": frequency_table(solutions),
        "swap_edges": [e.to_json() for e in edges],
        **report,
    }
