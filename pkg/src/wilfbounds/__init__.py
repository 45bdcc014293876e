"""Exact checks of Wilf-type bounds for numerical semigroups with large second generator."""

from .bounds import certify, ell_coefficients, prop47_rhs, reduced_coefficients, theta_decompose
from .core import Semigroup, build_semigroup, contains, left_class_count, wilf_check
from .enumeration import BACKEND, SweepConfig, enumerate_by_genus, fuzz_generators, sweep
from .ledger import BoundEntry, BoundLedger, Certificate
from .matching import apery_pairs
from .partition import partition_generators

__version__ = "0.1.0"
