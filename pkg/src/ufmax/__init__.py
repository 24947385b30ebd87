"""Exact search and analysis of bounded distinct unit-fraction sums."""

__version__ = "0.1.0"

from .arith import Rational, format_rational, lcm_of_set, parse_rational  # noqa: F401
from .bounds import BoundReport, harmonic_window  # noqa: F401
from .sieve import ExclusionReport, sieve_fixed_point  # noqa: F401
from .solver import SearchResult, SearchSpec, solve, verify_solution  # noqa: F401
