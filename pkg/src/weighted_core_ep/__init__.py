"""Weighted core-EP generalized inverses, exact and floating."""

from weighted_core_ep.classical import drazin, moore_penrose, weighted_mp
from weighted_core_ep.config import WcepConfig
from weighted_core_ep.core_ep import core_ep, dual_core_ep
from weighted_core_ep.exceptions import WcepError
from weighted_core_ep.linalg import index
from weighted_core_ep.matrix import Backend, Matrix, Tolerance
from weighted_core_ep.results import (
    ConstructionPath,
    InverseKind,
    InverseResult,
    NoExist,
)
from weighted_core_ep.scalars import GaussianRational
from weighted_core_ep.star import star_core_ep
from weighted_core_ep.verify import AxiomReport, certify, classify_inverse
from weighted_core_ep.weights import Weight

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "Backend",
    "ConstructionPath",
    "GaussianRational",
    "InverseKind",
    "InverseResult",
    "Matrix",
    "NoExist",
    "Tolerance",
    "WcepConfig",
    "WcepError",
    "Weight",
    "__version__",
    "certify",
    "classify_inverse",
    "core_ep",
    "drazin",
    "dual_core_ep",
    "index",
    "moore_penrose",
    "star_core_ep",
    "weighted_mp",
]
