"""Exact-arithmetic workbench for anti-dendriform algebras.

Structure constants over the rationals (or a small prime field); axiom and
compatibility checkers with traceable equation labels; constructions for
split/unified/crossed/bicrossed products, non-abelian cocycles, the
automorphism-lifting machinery, bialgebras and the Yang-Baxter residual.
"""

__version__ = "0.1.0"

from .algebra import ADAlgebra, BilinearOp, check_anti_dendriform, check_associative
from .fields import RATIONALS, InputError, PrimeField, field_from_name
from .reporting import PreconditionFailure, Report, Violation
from .reps import ADRep, check_representation, dual_representation, semidirect_product

__all__ = [
    "ADAlgebra", "ADRep", "BilinearOp", "InputError", "PreconditionFailure",
    "PrimeField", "RATIONALS", "Report", "Violation", "check_anti_dendriform",
    "check_associative", "check_representation", "dual_representation",
    "field_from_name", "semidirect_product", "__version__",
]
