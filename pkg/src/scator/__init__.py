"""Hyperbolic scator algebra in 1+2 and 1+3 dimensions."""
from .core import Causality, Scator, classify, conjugate, delta_defect, inverse, modulus_squared, product
from .dualities import DualityKind, dual
from .embedding import MultiVec4, embed, kappa, kappa_n, project, unembed
from .metric import dot
from .numeric import DomainError, NotInImage, NotInvertible, ScatorError, Tolerance
from .scator3d import MultiVec8, Scator3, embed3, product3

__all__ = [
    "Causality", "DomainError", "DualityKind", "MultiVec4", "MultiVec8", "NotInImage",
    "NotInvertible", "Scator", "Scator3", "ScatorError", "Tolerance", "classify", "conjugate",
    "delta_defect", "dot", "dual", "embed", "embed3", "inverse", "kappa", "kappa_n",
    "modulus_squared", "product", "product3", "project", "unembed",
]
