"""Numerical checks of polylogarithm identities and visible-point product formulas."""
from .polylog import DivergenceError, DomainError, li, li_neg, li_pos, rogers_l, stirling2, zeta

__version__ = "0.1.0"

__all__ = ["DomainError", "DivergenceError", "li", "li_neg", "li_pos", "rogers_l",
           "stirling2", "zeta", "__version__"]
