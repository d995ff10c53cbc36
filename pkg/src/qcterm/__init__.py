"""Exact verification of q-series constant term identities.

Everything is computed over QQ(q) with zero tolerance: constant terms are
extracted by exact expansion and compared with closed forms structurally.
"""

__version__ = "0.1.0"

from .qfield import PoleError, QRat, QTRat, q_binomial, q_factorial, q_poch_qpower, qpow
from .partitions import Partition, conjugate, dominance_leq, partitions_of
from .laurent import LaurentPoly, Monomial, ct
from .symfunc import SymFunc, convert, hall_inner
from .macdonald import b_lambda, macdonald_P, macdonald_Q
from .identities import VerdictRecord, verify_identity

__all__ = [
    "__version__",
    "PoleError",
    "QRat",
    "QTRat",
    "q_binomial",
    "q_factorial",
    "q_poch_qpower",
    "qpow",
    "Partition",
    "conjugate",
    "dominance_leq",
    "partitions_of",
    "LaurentPoly",
    "Monomial",
    "ct",
    "SymFunc",
    "convert",
    "hall_inner",
    "macdonald_P",
    "macdonald_Q",
    "b_lambda",
    "VerdictRecord",
    "verify_identity",
]
