"""Jet schemes of the double point: Hilbert series, Groebner bases, Betti numbers and syzygies."""

from jet_schemes.arith import BiSeries, QPolynomial, qbinom
from jet_schemes.betti import BettiTable, betti_rank, betti_table
from jet_schemes.config import RunConfig
from jet_schemes.exceptions import JetSchemeError, ResourceCapExceeded, TruncationMismatchError, VerificationMismatch
from jet_schemes.free_module import FreeVector, phi
from jet_schemes.groebner import GroebnerBasis, buchberger, reduce_basis
from jet_schemes.hilbert import HilbertMethod, hilbert_series
from jet_schemes.jet import recursive_gb, reduced_gb
from jet_schemes.planner import VerificationPlanner
from jet_schemes.poly import Monomial, Polynomial

__all__ = [
    "BiSeries",
    "QPolynomial",
    "qbinom",
    "BettiTable",
    "betti_rank",
    "betti_table",
    "RunConfig",
    "JetSchemeError",
    "ResourceCapExceeded",
    "TruncationMismatchError",
    "VerificationMismatch",
    "FreeVector",
    "phi",
    "GroebnerBasis",
    "buchberger",
    "reduce_basis",
    "HilbertMethod",
    "hilbert_series",
    "recursive_gb",
    "reduced_gb",
    "Monomial",
    "Polynomial",
    "VerificationPlanner",
]
