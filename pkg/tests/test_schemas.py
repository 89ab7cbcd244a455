"""Matrix file and certificate schema tests."""

from __future__ import annotations

import json
import logging

import pytest
from pydantic import ValidationError

from weighted_core_ep.core_ep import core_ep
from weighted_core_ep.exceptions import BackendMismatchError, MatrixFileError
from weighted_core_ep.matrix import Backend, Matrix
from weighted_core_ep.results import InverseKind, InverseResult
from weighted_core_ep.scalars import GaussianRational
from weighted_core_ep.schemas import (
    Certificate,
    MatrixFile,
    ScalarKind,
    certificate_path,
    load_matrix_file,
    write_certificate,
    write_matrix_file,
)


class TestMatrixFile:
    def test_rational_entries(self) -> None:
        mf = MatrixFile(
            rows=1,
            cols=3,
            scalar=ScalarKind.RATIONAL,
            data=[["-3/136", 2, "1/2+3/4i"]],
        )
        m = mf.to_matrix()
        assert m.is_exact
        assert m[0, 0] == GaussianRational.parse("-3/136")
        assert m[0, 1] == GaussianRational(2)
        assert m[0, 2] == GaussianRational.parse("1/2+3/4i")

    def test_float_entries(self) -> None:
        mf = MatrixFile(
            rows=1, cols=2, scalar=ScalarKind.FLOAT, data=[[0.5, [1.0, -2.0]]]
        )
        m = mf.to_matrix(Backend.FLOAT)
        assert m[0, 0] == 0.5
        assert m[0, 1] == complex(1.0, -2.0)

    def test_row_count_must_match(self) -> None:
        with pytest.raises(ValidationError, match="Expected 2 rows"):
            MatrixFile(rows=2, cols=1, scalar="rational", data=[["1"]])

    def test_row_length_must_match(self) -> None:
        with pytest.raises(ValidationError, match="Row 0 has 2 entries"):
            MatrixFile(rows=1, cols=1, scalar="rational", data=[["1", "2"]])

    def test_bad_rational(self) -> None:
        with pytest.raises(ValidationError, match="Cannot parse"):
            MatrixFile(rows=1, cols=1, scalar="rational", data=[["1/0"]])

    def test_float_in_rational_file(self) -> None:
        with pytest.raises(ValidationError, match="string or integer"):
            MatrixFile(rows=1, cols=1, scalar="rational", data=[[0.25]])

    def test_string_in_float_file(self) -> None:
        with pytest.raises(ValidationError, match="must be a number"):
            MatrixFile(rows=1, cols=1, scalar="float", data=[["1/2"]])

    def test_bad_complex_pair(self) -> None:
        with pytest.raises(ValidationError, match=r"\[re, im\]"):
            MatrixFile(rows=1, cols=1, scalar="float", data=[[[1.0, 2.0, 3.0]]])

    def test_dimensions_positive(self) -> None:
        with pytest.raises(ValidationError):
            MatrixFile(rows=0, cols=1, scalar="rational", data=[])

    def test_float_file_on_exact_backend(self) -> None:
        mf = MatrixFile(rows=1, cols=1, scalar="float", data=[[1.5]])
        with pytest.raises(BackendMismatchError):
            mf.to_matrix(Backend.EXACT)

    def test_rational_promotion_warns(self, caplog) -> None:
        mf = MatrixFile(rows=1, cols=1, scalar="rational", data=[["1/4"]])
        with caplog.at_level(logging.WARNING, logger="weighted_core_ep.schemas"):
            m = mf.to_matrix(Backend.FLOAT)
        assert m.backend is Backend.FLOAT
        assert m[0, 0] == 0.25
        assert "Promoting" in caplog.text

    def test_from_exact_matrix(self) -> None:
        m = Matrix.from_rows([["5/17", "3/34"], [0, "-1+i"]])
        mf = MatrixFile.from_matrix(m)
        assert mf.scalar is ScalarKind.RATIONAL
        assert mf.data == [["5/17", "3/34"], ["0", "-1+i"]]
        assert mf.to_matrix() == m

    def test_from_float_matrix(self) -> None:
        m = Matrix.from_rows([[0.5, complex(0, 2)]], Backend.FLOAT)
        mf = MatrixFile.from_matrix(m)
        assert mf.scalar is ScalarKind.FLOAT
        assert mf.data == [[0.5, [0.0, 2.0]]]

    def test_dumps_is_json(self) -> None:
        text = MatrixFile.from_matrix(Matrix.identity(2)).dumps()
        assert text.endswith("\n")
        payload = json.loads(text)
        assert payload["rows"] == 2
        assert payload["scalar"] == "rational"
        assert payload["data"] == [["1", "0"], ["0", "1"]]


class TestFiles:
    def test_write_then_load(self, tmp_path) -> None:
        m = Matrix.from_rows([["-5/68", "3/2"]])
        path = write_matrix_file(tmp_path / "x.json", m)
        assert load_matrix_file(path).to_matrix() == m

    def test_canonical_file_rewrites_byte_identical(self, tmp_path) -> None:
        m = Matrix.from_rows([["1/2+3/4i", "-7"], [0, "5/17"]])
        path = write_matrix_file(tmp_path / "m.json", m)
        text = path.read_text(encoding="utf-8")
        assert MatrixFile.model_validate_json(text).dumps() == text
        reloaded = load_matrix_file(path).to_matrix()
        again = write_matrix_file(tmp_path / "n.json", reloaded)
        assert again.read_text(encoding="utf-8") == text

    def test_missing_file(self, tmp_path) -> None:
        with pytest.raises(MatrixFileError, match="Cannot read"):
            load_matrix_file(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path) -> None:
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(MatrixFileError, match="Invalid matrix file"):
            load_matrix_file(path)

    def test_header_mismatch(self, tmp_path) -> None:
        path = tmp_path / "short.json"
        path.write_text(
            json.dumps(
                {"rows": 2, "cols": 2, "scalar": "rational", "data": [["1", "0"]]}
            ),
            encoding="utf-8",
        )
        with pytest.raises(MatrixFileError):
            load_matrix_file(path)

    def test_certificate_path(self) -> None:
        assert certificate_path("out/X.json").name == "X.cert.json"
        assert certificate_path("X").name == "X.cert.json"


class TestCertificate:
    def test_from_result(self, ex1, tmp_path) -> None:
        result = core_ep(ex1.a, ex1.e)
        assert isinstance(result, InverseResult)
        cert = Certificate.from_result(result)
        assert cert.kind is InverseKind.CORE_EP_E
        assert cert.backend is Backend.EXACT
        assert cert.index_used == 2
        assert cert.report.passed

        sidecar = write_certificate(tmp_path / "X.json", cert)
        assert sidecar == tmp_path / "X.cert.json"
        loaded = Certificate.model_validate_json(sidecar.read_text())
        assert loaded.kind is InverseKind.CORE_EP_E
        assert loaded.report.passed
        assert loaded.path == result.path
