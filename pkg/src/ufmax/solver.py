"""Exhaustive pruned search for k distinct reciprocals summing to a target.

The engine works on the sieved candidate list, scaled by L = lcm(candidates)
so the inner loop is pure integer arithmetic: find index subsets of the
weight list w_i = L / d_i (descending) of size k summing to target * L.

Candidates branch in ascending denominator order.  At a node with r terms
still needed from suffix positions i.., we prune unless

    (sum of r smallest suffix weights) <= remaining <= (sum of r largest),

both read off a precomputed suffix cumulative array.  These windows are exact,
so the search is exhaustive: every solution is found exactly once.

Parallel mode seeds the work queue with the subtrees below the first two
chosen denominators; workers return per-branch solution lists that are
concatenated in branch order, so output is identical for any worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .arith import format_rational, lcm_of_set, scale_fits, to_scaled
from .sieve import sieve_fixed_point

ONE = Fraction(1)

_N_NODES, _N_PRUNE_MIN, _N_PRUNE_MAX = 0, 1, 2


@dataclass(frozen=True)
class SearchSpec:
    lo: int
    hi: int
    k: int | tuple[int, int] | None  # exact count, (kmin, kmax), or None = max
    target: Fraction = ONE
    mode: str = "dfs"  # "dfs" | "complement"
    candidates: tuple[int, ...] | None = None  # default: sieve output

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"bad range [{self.lo}, {self.hi}]")
        if self.target <= 0:
            raise ValueError("target must be positive")
        if self.mode not in ("dfs", "complement"):
            raise ValueError(f"unknown mode {self.mode!r}")

    def to_json(self) -> dict:
        k = self.k
        return {
            "lo": self.lo,
            "hi": self.hi,
            "k": list(k) if isinstance(k, tuple) else k,
            "target": format_rational(self.target),
            "mode": self.mode,
            "candidates": list(self.candidates) if self.candidates else None,
        }


@dataclass
class SearchResult:
    spec: SearchSpec
    solutions: list[tuple[int, ...]]
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "solutions": [list(s) for s in self.solutions],
            "stats": self.stats,
        }


def _search_exact(ws, cum, windex, i, r, T, prefix, stats):
    """All size-r index subsets of positions i.. summing to T, DFS order."""
    sols = []
    m = len(ws)
    if r == 0:
        if T == 0:
            sols.append(prefix)
        return sols
    chosen = list(prefix)

    def rec(i, r, T):
        stats[_N_NODES] += 1
        while True:
            if m - i < r or T < cum[m - r]:
                stats[_N_PRUNE_MIN] += 1
                return
            if T > cum[i] - cum[i + r]:
                stats[_N_PRUNE_MAX] += 1
                return
            if r == 1:
                j = windex.get(T, -1)
                if j >= i:
                    sols.append((*chosen, j))
                return
            chosen.append(i)
            rec(i + 1, r - 1, T - ws[i])
            chosen.pop()
            i += 1

    rec(i, r, T)
    return sols


def _seed_tasks(ws, cum, windex, k, T0):
    """Subtree roots after the first two include decisions, in DFS order.

    Each task is (i, r, T, prefix); running _search_exact on the tasks in
    order reproduces the serial traversal exactly.
    """
    tasks = []
    m = len(ws)

    def rec(i, r, T, prefix):
        if len(prefix) == 2 or r <= 1:
            tasks.append((i, r, T, prefix))
            return
        while True:
            if m - i < r or T < cum[m - r] or T > cum[i] - cum[i + r]:
                return
            rec(i + 1, r - 1, T - ws[i], prefix + (i,))
            i += 1

    rec(0, k, T0, ())
    return tasks


def _run_task(args):
    ws, cum, windex, task = args
    stats = [0, 0, 0]
    i, r, T, prefix = task
    sols = _search_exact(ws, cum, windex, i, r, T, prefix, stats)
    return sols, stats


def _solve_fixed_k(ws, cum, windex, k, T0, threads, stats):
    m = len(ws)
    if k < 0 or k > m:
        return []
    if threads <= 1 or k < 3 or m < 8:
        local = [0, 0, 0]
        sols = _search_exact(ws, cum, windex, 0, k, T0, (), local)
    else:
        tasks = _seed_tasks(ws, cum, windex, k, T0)
        local = [0, 0, 0]
        sols = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            args = [(ws, cum, windex, t) for t in tasks]
            chunk = max(1, len(tasks) // (8 * threads))
            for part, pstats in pool.map(_run_task, args, chunksize=chunk):
                sols.extend(part)
                for j in range(3):
                    local[j] += pstats[j]
    stats["nodes"] += local[_N_NODES]
    stats["prune_min"] += local[_N_PRUNE_MIN]
    stats["prune_max"] += local[_N_PRUNE_MAX]
    return sols


def _max_feasible_k(cum, m, T0):
    """Largest r for which an r-subset could reach T0 by the weight windows;
    the candidate-set analogue of the harmonic suffix window."""
    best = 0
    for r in range(1, m + 1):
        if cum[m - r] <= T0 <= cum[0] - cum[r]:
            best = r
    return best


def solve(spec: SearchSpec, threads: int = 1) -> SearchResult:
    """All solutions for the spec; exhaustive over [lo, hi] because the
    default candidate set comes from the residue sieve, whose exclusions are
    sound for any term count."""
    t0 = time.perf_counter()
    stats = {
        "nodes": 0,
        "prune_min": 0,
        "prune_max": 0,
        "ks_tried": [],
        "threads": threads,
        "mode": spec.mode,
    }

    if spec.candidates is not None:
        cands = sorted(set(spec.candidates))
    else:
        cands = sieve_fixed_point(spec.lo, spec.hi, spec.target).kept
    cands = [d for d in cands if spec.lo <= d <= spec.hi]
    stats["candidates"] = len(cands)

    if not cands:
        stats["infeasible"] = "empty candidate set"
        stats["wall_time_s"] = time.perf_counter() - t0
        return SearchResult(spec, [], stats)

    L = lcm_of_set(cands)
    stats["scale"] = L
    stats["scaled_64bit_safe"] = scale_fits(len(cands), L)
    if L % spec.target.denominator != 0:
        # no subset sum of reciprocals can have this denominator
        stats["infeasible"] = f"target denominator {spec.target.denominator} does not divide lcm {L}"
        stats["wall_time_s"] = time.perf_counter() - t0
        return SearchResult(spec, [], stats)
    T0 = to_scaled(spec.target, L)

    m = len(cands)
    ws = tuple(L // d for d in cands)  # strictly decreasing
    cum = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        cum[i] = cum[i + 1] + ws[i]
    windex = {w: i for i, w in enumerate(ws)}

    kbound = _max_feasible_k(cum, m, T0)
    stats["k_upper_bound"] = kbound

    if spec.k is None:
        ks = range(kbound, 0, -1)
        stop_at_first = True
    elif isinstance(spec.k, tuple):
        kmin, kmax = spec.k
        ks = range(max(1, kmin), min(kmax, m) + 1)
        stop_at_first = False
    else:
        ks = [spec.k]
        stop_at_first = False

    all_sols: list[tuple[int, ...]] = []
    for k in ks:
        stats["ks_tried"].append(k)
        if k < 1 or k > m or not (cum[m - k] <= T0 <= cum[0] - cum[k]):
            stats.setdefault("infeasible", f"k={k} outside weight window (bound {kbound})")
            continue
        if spec.mode == "complement":
            j = m - k
            Tc = cum[0] - T0
            idx_sols = _solve_fixed_k(ws, cum, windex, j, Tc, threads, stats)
            full = set(range(m))
            sols = [tuple(sorted(full - set(s))) for s in idx_sols]
        else:
            sols = _solve_fixed_k(ws, cum, windex, k, T0, threads, stats)
        found = [tuple(cands[i] for i in s) for s in sols]
        all_sols.extend(found)
        if stop_at_first and found:
            stats["max_k"] = k
            break

    all_sols = sorted(set(all_sols))
    stats["solutions"] = len(all_sols)
    stats["wall_time_s"] = time.perf_counter() - t0
    return SearchResult(spec, all_sols, stats)


@dataclass
class VerifyResult:
    ok: bool
    reason: str | None
    running_sums: list[Fraction]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "reason": self.reason,
            "running_sums": [format_rational(s) for s in self.running_sums],
        }


def verify_solution(dens, target: Fraction = ONE, lo: int | None = None, hi: int | None = None) -> VerifyResult:
    """Exact re-check on the Fraction path (independent of the scaled-integer
    search): distinctness, ordering/range, and the running sum after each
    term.  Returns the first violated condition on failure."""
    running: list[Fraction] = []
    total = Fraction(0)
    prev = 0
    for d in dens:
        if d <= prev:
            return VerifyResult(False, f"denominators not strictly increasing at {d}", running)
        if (lo is not None and d < lo) or (hi is not None and d > hi):
            return VerifyResult(False, f"denominator {d} out of range", running)
        prev = d
        total += Fraction(1, d)
        running.append(total)
    if total != target:
        return VerifyResult(
            False, f"sum is {format_rational(total)}, not {format_rational(target)}", running
        )
    return VerifyResult(True, None, running)


def usability_report(result: SearchResult) -> dict[int, int]:
    """How many solutions contain each denominator in [lo, hi]; a denominator
    is usable when its count is nonzero."""
    counts = {d: 0 for d in range(result.spec.lo, result.spec.hi + 1)}
    for sol in result.solutions:
        for d in sol:
            counts[d] += 1
    return counts
