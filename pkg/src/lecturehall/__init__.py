"""Ehrhart h*-polynomials, Gorenstein and level tests for lecture hall simplices."""
from .errors import BudgetExceeded, ConsistencyError, LectureHallError, SequenceError
from .eulerian import HStarPolynomial, hstar_by_ascents, hstar_by_parallelepiped, is_palindromic
from .gorenstein import GorensteinCertificate, classify, is_gorenstein, solve_c_chain
from .level import LevelnessReport, level_by_inversions, level_by_socle
from .seqcore import InversionSequence, SSequence, add_mod, ascent_set

__all__ = [
    "BudgetExceeded", "ConsistencyError", "GorensteinCertificate", "HStarPolynomial",
    "InversionSequence", "LectureHallError", "LevelnessReport", "SSequence", "SequenceError",
    "add_mod", "ascent_set", "classify", "hstar_by_ascents", "hstar_by_parallelepiped",
    "is_gorenstein", "is_palindromic", "level_by_inversions", "level_by_socle", "solve_c_chain",
]

__version__ = "0.1.0"
