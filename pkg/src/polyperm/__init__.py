"""Polynomial growth of permutation pattern classes."""
from __future__ import annotations

from .classifier import Basis, classify, match_basis
from .degree import BetaShape, degree_of, witness_irreducible
from .enumerator import count_avoiders, fit_eventual_polynomial
from .errors import BudgetExceeded, Discrepancy, InvalidInput
from .genfunc import f_series, g_poly
from .perms import Perm, contract, involves

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BetaShape",
    "BudgetExceeded",
    "Discrepancy",
    "InvalidInput",
    "Perm",
    "classify",
    "contract",
    "count_avoiders",
    "degree_of",
    "f_series",
    "fit_eventual_polynomial",
    "g_poly",
    "involves",
    "match_basis",
    "witness_irreducible",
]
