"""Backend kernels."""

from weighted_core_ep.kernels.exact import ExactKernel
from weighted_core_ep.kernels.floating import FloatKernel

__all__ = ["ExactKernel", "FloatKernel"]
