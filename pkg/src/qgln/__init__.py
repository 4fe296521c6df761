"""Exact symbolic calculus for the quantized enveloping algebra of gl(n+1):
PBW normal ordering, parabolic Verma module pairings, and invariant star
products on the big cell of GL(n+1)/GL(n)xGL(1)."""

from .exactalg import (
    DenominatorZero,
    MPoly,
    Rat,
    RatFun,
    eval_ratfun,
    qbracket_weight,
    qfact,
    qhat,
    qhatfact,
    qint,
    zq,
)
from .qea import Algebra, AlgElt, RankError, TensorElt, qbr, root_e, root_e_tilde, root_f

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgElt",
    "DenominatorZero",
    "MPoly",
    "Rat",
    "RatFun",
    "RankError",
    "TensorElt",
    "eval_ratfun",
    "qbr",
    "qbracket_weight",
    "qfact",
    "qhat",
    "qhatfact",
    "qint",
    "root_e",
    "root_e_tilde",
    "root_f",
    "zq",
]
