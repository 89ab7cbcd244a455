"""Matrix file and certificate schemas for the command line."""

from __future__ import annotations

import logging
from enum import StrEnum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, PositiveInt, ValidationError, model_validator

from weighted_core_ep.exceptions import BackendMismatchError, MatrixFileError
from weighted_core_ep.matrix import Matrix
from weighted_core_ep.protocols import Backend
from weighted_core_ep.results import InverseKind, InverseResult
from weighted_core_ep.scalars import GaussianRational
from weighted_core_ep.verify import AxiomReport

logger = logging.getLogger(__name__)

__all__ = [
    "Certificate",
    "MatrixFile",
    "ScalarKind",
    "certificate_path",
    "load_matrix_file",
    "write_certificate",
    "write_matrix_file",
]

Entry = str | int | float | list[float]


class ScalarKind(StrEnum):
    RATIONAL = "rational"
    FLOAT = "float"


class MatrixFile(BaseModel):
    """A matrix on disk.

    Rational entries are strings such as ``"-3/136"`` or ``"1/2+3/4i"``
    (plain integers are accepted too). Float entries are numbers or
    ``[re, im]`` pairs.
    """

    rows: PositiveInt
    cols: PositiveInt
    scalar: ScalarKind
    data: list[list[Entry]]

    @model_validator(mode="after")
    def _check_entries(self) -> MatrixFile:
        if len(self.data) != self.rows:
            raise ValueError(f"Expected {self.rows} rows, got {len(self.data)}")
        for i, row in enumerate(self.data):
            if len(row) != self.cols:
                raise ValueError(
                    f"Row {i} has {len(row)} entries, expected {self.cols}"
                )
            for value in row:
                if self.scalar is ScalarKind.RATIONAL:
                    _parse_rational(value)
                else:
                    _parse_float(value)
        return self

    def to_matrix(self, backend: Backend | str = Backend.EXACT) -> Matrix:
        backend = Backend(backend)
        if self.scalar is ScalarKind.FLOAT:
            if backend is Backend.EXACT:
                raise BackendMismatchError(
                    "Float matrix files cannot be loaded on the exact backend"
                )
            rows: list[list[Any]] = [
                [_parse_float(v) for v in row] for row in self.data
            ]
            return Matrix.from_rows(rows, Backend.FLOAT)
        exact = Matrix.from_rows(
            [[_parse_rational(v) for v in row] for row in self.data],
            Backend.EXACT,
        )
        if backend is Backend.FLOAT:
            logger.warning("Promoting a rational matrix file to float")
            return exact.to_float()
        return exact

    @classmethod
    def from_matrix(cls, matrix: Matrix) -> MatrixFile:
        data: list[list[Entry]]
        if matrix.is_exact:
            data = [[str(v) for v in row] for row in matrix.to_rows()]
            scalar = ScalarKind.RATIONAL
        else:
            data = [[_float_entry(v) for v in row] for row in matrix.to_rows()]
            scalar = ScalarKind.FLOAT
        return cls(
            rows=matrix.rows, cols=matrix.cols, scalar=scalar, data=data
        )

    def dumps(self) -> str:
        """Canonical JSON text."""
        return self.model_dump_json(indent=2) + "\n"


class Certificate(BaseModel):
    """Sidecar written next to a computed inverse."""

    kind: InverseKind
    backend: Backend
    index_used: int | None = None
    power_used: int | None = None
    path: str = ""
    report: AxiomReport

    @classmethod
    def from_result(cls, result: InverseResult) -> Certificate:
        return cls(
            kind=result.kind,
            backend=result.value.backend,
            index_used=result.index_used,
            power_used=result.power_used,
            path=result.path,
            report=result.report,
        )


def _parse_rational(value: Entry) -> GaussianRational:
    if isinstance(value, bool) or not isinstance(value, str | int):
        raise ValueError(f"Rational entry {value!r} must be a string or integer")
    try:
        return GaussianRational.coerce(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"Cannot parse rational entry {value!r}") from exc


def _parse_float(value: Entry) -> complex:
    if isinstance(value, list):
        if len(value) != 2:
            raise ValueError(f"Complex entry {value!r} must be [re, im]")
        return complex(value[0], value[1])
    if isinstance(value, str):
        raise ValueError(f"Float entry {value!r} must be a number")
    return complex(value)


def _float_entry(value: complex) -> Entry:
    value = complex(value)
    if value.imag == 0:
        return value.real
    return [value.real, value.imag]


def load_matrix_file(path: str | Path) -> MatrixFile:
    """Read and validate a matrix file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixFileError(f"Cannot read {path}: {exc}") from exc
    try:
        return MatrixFile.model_validate_json(text)
    except ValidationError as exc:
        raise MatrixFileError(f"Invalid matrix file {path}: {exc}") from exc


def write_matrix_file(path: str | Path, matrix: Matrix) -> Path:
    target = Path(path)
    target.write_text(MatrixFile.from_matrix(matrix).dumps(), encoding="utf-8")
    return target


def certificate_path(path: str | Path) -> Path:
    """``OUT.json`` becomes ``OUT.cert.json``."""
    target = Path(path)
    return target.with_name(f"{target.stem}.cert.json")


def write_certificate(path: str | Path, certificate: Certificate) -> Path:
    target = certificate_path(path)
    target.write_text(
        certificate.model_dump_json(indent=2) + "\n", encoding="utf-8"
    )
    return target
