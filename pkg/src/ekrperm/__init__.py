"""Exact verification of the Erdos-Ko-Rado bound for permutations with k cycles.

Submodules: :mod:`~ekrperm.stirling`, :mod:`~ekrperm.permutations`,
:mod:`~ekrperm.families`, :mod:`~ekrperm.extremal` and the command line in
:mod:`~ekrperm.cli`.
"""
from .families import CycleSet, Family
from .permutations import Cycle, CyclePermutation, canonicalize, enumerate_snk, from_one_line, parse_cycles
from .stirling import signed_stirling, stirling_recurrence

__version__ = "0.1.0"

__all__ = [
    "Cycle",
    "CyclePermutation",
    "CycleSet",
    "Family",
    "canonicalize",
    "enumerate_snk",
    "from_one_line",
    "parse_cycles",
    "signed_stirling",
    "stirling_recurrence",
]
