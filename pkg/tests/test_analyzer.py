"""Analyzer: swap relations and aggregates on known solution pairs."""

from fractions import Fraction

import pytest

from ufmax.analyzer import (
    analyze,
    common_core,
    connectivity_report,
    frequency_table,
    swap_edges,
)

SOL_1 = (12, 17, 21, 22, 24, 26, 27, 30, 32, 33, 34, 35, 36, 38, 39, 40, 42,
         44, 48, 50, 52, 54, 55, 56, 60, 63, 66, 70, 72, 75, 76, 77, 78, 80,
         84, 85, 88, 90, 91, 95, 96, 99)
SOL_2 = (13, 17, 18, 21, 22, 24, 26, 27, 32, 33, 34, 35, 38, 40, 42, 44, 45,
         48, 50, 52, 54, 55, 56, 60, 63, 65, 66, 70, 72, 75, 76, 77, 78, 80,
         84, 85, 88, 90, 91, 95, 96, 99)


def test_swap_between_known_pair():
    (edge,) = swap_edges([SOL_1, SOL_2])
    assert edge.only_in_i == (12, 30, 36, 39)
    assert edge.only_in_j == (13, 18, 45, 65)
    assert edge.common_value == Fraction(199, 1170)


def test_swap_of_solution_with_itself():
    (edge,) = swap_edges([SOL_1, SOL_1])
    assert edge.only_in_i == edge.only_in_j == ()
    assert edge.common_value == 0


def test_common_core_pair():
    core = common_core([SOL_1, SOL_2])
    assert len(core) == 38
    assert core == sorted(set(SOL_1) & set(SOL_2))
    assert common_core([SOL_1]) == list(SOL_1)
    with pytest.raises(ValueError):
        common_core([])


def test_frequency_table():
    freq = frequency_table([SOL_1, SOL_2])
    assert freq[17] == 2
    assert freq[12] == 1
    assert 16 not in freq


def test_connectivity_small():
    a, b, c = (2, 3, 10, 15), (2, 4, 6, 12), (2, 3, 7, 42)
    rep = connectivity_report([a, b, c])
    # a-b differ in 3, a-c in 2, b-c in 3
    assert rep["connectivity_at"][3] is True
    assert rep["connectivity_at"][1] is False
    assert rep["nearest_neighbor_swap_size"] == [2, 3, 2]


def test_full_solution_set_swap_structure():
    """Every 42-term solution has a partner differing in 2..5 terms, and the
    swap graph at threshold 5 is connected."""
    from ufmax.solver import SearchSpec, solve

    sols = solve(SearchSpec(2, 99, 42, mode="complement")).solutions
    assert len(sols) == 27
    rep = connectivity_report(sols)
    assert all(2 <= s <= 5 for s in rep["nearest_neighbor_swap_size"])
    assert rep["connectivity_at"][5] is True


def test_core_equals_full_frequency():
    sols = [(2, 3, 10, 15), (2, 3, 7, 42), (2, 3, 9, 18)]
    freq = frequency_table(sols)
    core = common_core(sols)
    assert core == sorted(d for d, c in freq.items() if c == len(sols))


def test_analyze_payload_shape():
    out = analyze([SOL_1, SOL_2])
    assert out["common_core"] == common_core([SOL_1, SOL_2])
    assert out["max_swap_size"] == 4
    assert out["swap_edges"][0]["common_value"] == "199/1170"
