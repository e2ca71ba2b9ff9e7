"""Arithmetic-function tables and numerical checks for the elementary proof
of the prime number theorem and Dirichlet's theorem."""

from .asymptotics import (EventualBound, ResidualReport, bootstrap_sequence,
                          chebyshev_ratios, dvfsum_estimate, empirical_bound_refinement,
                          eventual_bound, log_grid, pntrlog2bnd_sides, selberg_residual)
from .characters import (Character, UnitGroup, all_characters, equidistribution_report,
                         orthogonality_check, pi_progression, unit_group)
from .divisors import (ArithmeticFunction, check_divisor_commutation_hyperbola,
                       check_divisor_commutation_nested, divisor_sum, mobius_invert,
                       selberg_lhs)
from .errors import DomainError, PreconditionError, ResourceLimitError
from .sieve import SieveTables, build_sieve, mangoldt_divisor_identity_check
from .tables import ChebyshevTables, Residual, build_tables

__version__ = "0.1.0"
