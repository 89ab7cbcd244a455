"""Immutable dense matrices over one scalar backend."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from weighted_core_ep.exceptions import BackendMismatchError, DimensionError
from weighted_core_ep.protocols import Backend, LinearAlgebraKernel
from weighted_core_ep.registry import get_kernel
from weighted_core_ep.scalars import GaussianRational

__all__ = ["Backend", "Matrix", "Tolerance"]

DEFAULT_RANK_REL = 1e-12
DEFAULT_RESIDUAL_REL = 1e-9


@dataclass(frozen=True, slots=True)
class Tolerance:
    """Rank and residual cutoffs.

    Both are zero on the exact backend, where decisions are exact.
    """

    rank_rel: float = 0.0
    residual_rel: float = 0.0

    def __post_init__(self) -> None:
        if self.rank_rel < 0 or self.residual_rel < 0:
            raise ValueError("Tolerances must be nonnegative")

    @classmethod
    def exact(cls) -> Tolerance:
        return cls(0.0, 0.0)

    @classmethod
    def floating(
        cls,
        rank_rel: float = DEFAULT_RANK_REL,
        residual_rel: float = DEFAULT_RESIDUAL_REL,
    ) -> Tolerance:
        if rank_rel <= 0 or residual_rel <= 0:
            raise ValueError("Float tolerances must be strictly positive")
        return cls(rank_rel, residual_rel)

    @classmethod
    def for_backend(cls, backend: Backend | str) -> Tolerance:
        if Backend(backend) is Backend.EXACT:
            return cls.exact()
        return cls.floating()


class Matrix:
    """Dense matrix tagged with its scalar backend.

    The wrapped array is read-only; every operation returns a new matrix.
    Exact matrices hold ``GaussianRational`` entries in an object array,
    float matrices hold ``complex128``.
    """

    __slots__ = ("_backend", "_data")

    _data: np.ndarray
    _backend: Backend

    def __init__(self, data: np.ndarray, backend: Backend | str) -> None:
        backend = Backend(backend)
        if data.ndim != 2:
            raise DimensionError(f"Expected a 2-D array, got {data.ndim}-D")
        expected = object if backend is Backend.EXACT else np.complex128
        if data.dtype != expected:
            raise BackendMismatchError(
                f"{backend} matrix cannot wrap a {data.dtype} array"
            )
        array = data.copy()
        array.flags.writeable = False
        self._data = array
        self._backend = backend

    # Construction

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Any]], backend: Backend | str = Backend.EXACT
    ) -> Matrix:
        kernel = get_kernel(backend)
        return cls(kernel.asarray(rows), kernel.backend)

    @classmethod
    def identity(cls, n: int, backend: Backend | str = Backend.EXACT) -> Matrix:
        kernel = get_kernel(backend)
        return cls(kernel.identity(n), kernel.backend)

    @classmethod
    def zeros(
        cls, rows: int, cols: int, backend: Backend | str = Backend.EXACT
    ) -> Matrix:
        kernel = get_kernel(backend)
        return cls(kernel.zeros(rows, cols), kernel.backend)

    @classmethod
    def diag(
        cls, entries: Iterable[Any], backend: Backend | str = Backend.EXACT
    ) -> Matrix:
        values = list(entries)
        n = len(values)
        zero = 0 if Backend(backend) is Backend.EXACT else 0.0
        rows = [
            [values[i] if i == j else zero for j in range(n)] for i in range(n)
        ]
        return cls.from_rows(rows, backend)

    @classmethod
    def block_diag(cls, *blocks: Matrix) -> Matrix:
        if not blocks:
            raise DimensionError("block_diag needs at least one block")
        backend = _common_backend(*blocks)
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = get_kernel(backend).zeros(rows, cols)
        i = j = 0
        for block in blocks:
            out[i : i + block.rows, j : j + block.cols] = block.data
            i += block.rows
            j += block.cols
        return cls(out, backend)

    @classmethod
    def hstack(cls, *parts: Matrix) -> Matrix:
        backend = _common_backend(*parts)
        if len({p.rows for p in parts}) != 1:
            raise DimensionError("hstack needs equal row counts")
        return cls(np.hstack([p.data for p in parts]), backend)

    @classmethod
    def vstack(cls, *parts: Matrix) -> Matrix:
        backend = _common_backend(*parts)
        if len({p.cols for p in parts}) != 1:
            raise DimensionError("vstack needs equal column counts")
        return cls(np.vstack([p.data for p in parts]), backend)

    # Accessors

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def backend(self) -> Backend:
        return self._backend

    @property
    def kernel(self) -> LinearAlgebraKernel:
        return get_kernel(self._backend)

    @property
    def rows(self) -> int:
        return int(self._data.shape[0])

    @property
    def cols(self) -> int:
        return int(self._data.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_exact(self) -> bool:
        return self._backend is Backend.EXACT

    def __getitem__(self, key: tuple[int, int]) -> Any:
        return self._data[key]

    def to_rows(self) -> list[list[Any]]:
        return [list(row) for row in self._data]

    # Algebra

    def _check_other(self, other: Matrix) -> None:
        if self._backend is not other._backend:
            raise BackendMismatchError(
                f"Cannot combine {self._backend} and {other._backend} matrices"
            )

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_other(other)
        if self.cols != other.rows:
            raise DimensionError(
                f"Cannot multiply {self.shape} by {other.shape}"
            )
        if self.cols == 0:
            return Matrix.zeros(self.rows, other.cols, self._backend)
        return Matrix(self._data @ other._data, self._backend)

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_other(other)
        if self.shape != other.shape:
            raise DimensionError(f"Cannot add {self.shape} and {other.shape}")
        return Matrix(self._data + other._data, self._backend)

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_other(other)
        if self.shape != other.shape:
            raise DimensionError(
                f"Cannot subtract {other.shape} from {self.shape}"
            )
        return Matrix(self._data - other._data, self._backend)

    def __neg__(self) -> Matrix:
        return Matrix(-self._data, self._backend)

    def scale(self, factor: Any) -> Matrix:
        if self.is_exact:
            value = GaussianRational.coerce(factor)
            scaled = np.frompyfunc(lambda x: x * value, 1, 1)
            out = np.asarray(scaled(self._data), dtype=object)
            return Matrix(out.reshape(self.shape), self._backend)
        if isinstance(factor, GaussianRational | Fraction):
            factor = complex(factor)
        return Matrix(self._data * complex(factor), self._backend)

    def conj_transpose(self) -> Matrix:
        return Matrix(self.kernel.conj_transpose(self._data), self._backend)

    @property
    def H(self) -> Matrix:
        """Conjugate transpose."""
        return self.conj_transpose()

    def power(self, exponent: int) -> Matrix:
        """``self ** exponent`` by binary exponentiation; ``A^0 = I``."""
        if not self.is_square:
            raise DimensionError(f"Power needs a square matrix, got {self.shape}")
        if exponent < 0:
            raise ValueError("Exponent must be nonnegative")
        result = Matrix.identity(self.rows, self._backend)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            exponent >>= 1
            if exponent:
                base = base @ base
        return result

    def is_zero(self) -> bool:
        return self.kernel.is_zero(self._data)

    def frobenius_norm(self) -> float:
        return self.kernel.frobenius_norm(self._data)

    def to_float(self) -> Matrix:
        """Float copy of this matrix (identity for float matrices)."""
        if not self.is_exact:
            return self
        out = np.empty(self.shape, dtype=np.complex128)
        for index, value in np.ndenumerate(self._data):
            out[index] = complex(value)
        return Matrix(out, Backend.FLOAT)

    # Comparison

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self._backend is other._backend
            and self.shape == other.shape
            and bool(np.all(self._data == other._data))
        )

    def __hash__(self) -> int:
        return hash((self._backend, self.shape, tuple(self._data.flat)))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(_format_entry(x) for x in row) for row in self._data
        )
        return f"Matrix[{self._backend}]({body})"


def _format_entry(value: Any) -> str:
    if isinstance(value, GaussianRational):
        return str(value)
    return f"{complex(value):.6g}"


def _common_backend(*matrices: Matrix) -> Backend:
    backends = {m.backend for m in matrices}
    if len(backends) != 1:
        raise BackendMismatchError("Matrices use different backends")
    return backends.pop()
