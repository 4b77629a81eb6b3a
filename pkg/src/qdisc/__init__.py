"""Exact computer algebra for the quantum disc.

Modules cover the coefficient field Q(q^(1/2)), a free *-algebra with
oriented rewriting, simple Lie root data, U_q(sl2) with its Hopf structure,
q-difference module-algebra actions, the first-order R-matrix, the Fock
representation, the invariant q-trace integral, and the quantum SL2 /
localized orbit picture, plus a CLI (`qdisc`).

The most used entry points are re-exported here; everything else lives on
the topical modules.
"""

from .scalar import Scalar, ZERO, ONE, Q, S, q_pow, s_pow, q_int
from .ncpoly import NCExpr, Presentation, disc
from .uqsl2 import UEl, coproduct, counit, antipode
from .modalg import ExtElement, LaurentElement, act, gen_act
from .fock import fock_matrix
from .parser import parse_expression

__all__ = [
    "Scalar", "ZERO", "ONE", "Q", "S", "q_pow", "s_pow", "q_int",
    "NCExpr", "Presentation", "disc",
    "UEl", "coproduct", "counit", "antipode",
    "ExtElement", "LaurentElement", "act", "gen_act",
    "fock_matrix", "parse_expression",
]

__version__ = "0.1.0"
