"""p-adic special values and the identities they satisfy, checked at finite precision."""

from .padic import INF, PadicNumber, PrecisionError, iwasawa_log, padic_from_rational, teichmuller
from .gamma import gamma_p, gamma_p_rational
from .gauss import GaussSumInstance, gauss_sum, gross_koblitz_verify, jacobi_sum
from .dirichlet import CyclotomicNumber, DirichletCharacter, kronecker_character, primitive_odd_characters
from .lfunctions import ferrero_greenberg_report, lp_taylor
from .quadratic import ImaginaryQuadraticField, verify_rank_one
from .grouprings import (
    AbelianFieldDatum,
    FiniteAbelianGroup,
    GroupRingElement,
    ideal_power_structure,
    membership_in_ideal_power,
    refined_congruence_check_over_Q,
    theta_element,
)
from .eisenstein import DualScalar, DualSeries, verify_F_eigen

__version__ = "0.1.0"

__all__ = [
    "INF", "PadicNumber", "PrecisionError", "iwasawa_log", "padic_from_rational", "teichmuller",
    "gamma_p", "gamma_p_rational",
    "GaussSumInstance", "gauss_sum", "gross_koblitz_verify", "jacobi_sum",
    "CyclotomicNumber", "DirichletCharacter", "kronecker_character", "primitive_odd_characters",
    "ferrero_greenberg_report", "lp_taylor",
    "ImaginaryQuadraticField", "verify_rank_one",
    "AbelianFieldDatum", "FiniteAbelianGroup", "GroupRingElement", "ideal_power_structure",
    "membership_in_ideal_power", "refined_congruence_check_over_Q", "theta_element",
    "DualScalar", "DualSeries", "verify_F_eigen",
]
