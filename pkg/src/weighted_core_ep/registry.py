"""Kernel registry: maps a backend to its linear algebra kernel."""

from __future__ import annotations

import logging

from weighted_core_ep.protocols import Backend, LinearAlgebraKernel

logger = logging.getLogger(__name__)


class KernelRegistry:
    """Registry of kernels keyed by backend.

    Built-in kernels are registered lazily on first lookup.
    """

    def __init__(self) -> None:
        self._kernels: dict[Backend, LinearAlgebraKernel] = {}
        self._discovered = False

    def register(self, kernel: LinearAlgebraKernel) -> None:
        if not isinstance(kernel, LinearAlgebraKernel):
            raise TypeError(f"{kernel!r} does not implement LinearAlgebraKernel")
        self._kernels[Backend(kernel.backend)] = kernel
        logger.debug("Registered %s kernel %r", kernel.backend, kernel)

    def discover(self) -> None:
        if self._discovered:
            return
        from weighted_core_ep.kernels import ExactKernel, FloatKernel

        for kernel in (ExactKernel(), FloatKernel()):
            self._kernels.setdefault(kernel.backend, kernel)
        self._discovered = True

    def get(self, backend: Backend | str) -> LinearAlgebraKernel:
        self.discover()
        try:
            return self._kernels[Backend(backend)]
        except (KeyError, ValueError) as exc:
            raise KeyError(f"No kernel registered for {backend!r}") from exc

    def backends(self) -> list[Backend]:
        self.discover()
        return sorted(self._kernels)


registry = KernelRegistry()


def get_kernel(backend: Backend | str) -> LinearAlgebraKernel:
    """Return the kernel registered for ``backend``."""
    return registry.get(backend)
