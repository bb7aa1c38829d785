"""Enumeration and counting of André planes via group actions on norm-surface labels."""

from .andre2d import count_2d, enumerate_2d, fixed_subsets, xi_generators
from .andrehd import (
    UpsilonElement,
    apply_upsilon,
    count_hd,
    enumerate_hd,
    minus_fixed_count,
    plus_fixed_count,
    upsilon_generators,
)
from .field import FiniteField, make_field
from .perm import Perm, cycle_structure, generate_group, orbits

__all__ = [
    "FiniteField",
    "Perm",
    "UpsilonElement",
    "apply_upsilon",
    "count_2d",
    "count_hd",
    "cycle_structure",
    "enumerate_2d",
    "enumerate_hd",
    "fixed_subsets",
    "generate_group",
    "make_field",
    "minus_fixed_count",
    "orbits",
    "plus_fixed_count",
    "upsilon_generators",
    "xi_generators",
]
