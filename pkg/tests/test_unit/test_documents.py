"""
Unit tests for reading and writing algebra, representation and omni-representation documents.
"""

import json

import numpy as np
import pytest

from omnileib.algebra import AlgebraValidationError
from omnileib.catalog import catalog
from omnileib.documents import (
    DocumentError,
    document_kind,
    dumps,
    parse_algebra,
    parse_omnirep,
    parse_omnirep_document,
    parse_rep,
    read_document,
    rep_to_data,
    serialize_algebra,
    serialize_omnirep,
    serialize_rep,
)
from omnileib.linalg import InputError
from omnileib.omni import OmniRepValidationError, adjoint_omnirep
from omnileib.representations import RepresentationValidationError, adjoint_rep


def read_fixture(fixture_path, name):
    with open(fixture_path(name), encoding="utf-8") as f:
        return f.read()


class TestParseAlgebra:
    """Algebra documents and their error locations."""

    @pytest.mark.unit
    def test_unnamed_inline_algebra(self, l2, fixture_path):
        alg = parse_algebra(read_fixture(fixture_path, "l2_algebra.json"))
        assert alg == l2
        assert alg.name == ""

    @pytest.mark.unit
    def test_index_out_of_range(self, fixture_path):
        with pytest.raises(DocumentError) as exc_info:
            parse_algebra(read_fixture(fixture_path, "bad_index.json"))
        assert exc_info.value.location == "bracket[0][0]"
        assert "out of range 1..2" in str(exc_info.value)

    @pytest.mark.unit
    def test_bad_value(self):
        text = json.dumps({"dim": 1, "bracket": [[1, 1, 1, "abc"]]})
        with pytest.raises(DocumentError) as exc_info:
            parse_algebra(text)
        assert exc_info.value.location == "bracket[0][3]"

    @pytest.mark.unit
    def test_duplicate_entry(self):
        text = json.dumps({"dim": 2, "bracket": [[2, 2, 1, "1"], [2, 2, 1, "2"]]})
        with pytest.raises(DocumentError) as exc_info:
            parse_algebra(text)
        assert exc_info.value.location == "bracket[1]"

    @pytest.mark.unit
    def test_missing_dim(self):
        with pytest.raises(DocumentError, match="Missing key 'dim'"):
            parse_algebra('{"bracket": []}')

    @pytest.mark.unit
    def test_invalid_json(self):
        with pytest.raises(DocumentError) as exc_info:
            parse_algebra('{"dim": 2,')
        assert exc_info.value.location.startswith("line 1 column")
        assert isinstance(exc_info.value, InputError)

    @pytest.mark.unit
    def test_non_leibniz_table(self, fixture_path):
        text = read_fixture(fixture_path, "non_leibniz.json")
        with pytest.raises(AlgebraValidationError) as exc_info:
            parse_algebra(text)
        assert exc_info.value.check.witness == (1, 1, 1)
        assert parse_algebra(text, validate=False).name == "nonleibniz2"


class TestParseRepresentations:
    """Representation and omni-representation documents."""

    @pytest.mark.unit
    def test_adjoint_rep_document(self, l2, fixture_path):
        rep = parse_rep(read_fixture(fixture_path, "l2_adjoint_rep.json"))
        assert rep == adjoint_rep(l2)
        assert rep.name == "L2 adjoint"

    @pytest.mark.unit
    def test_broken_rep_document(self, fixture_path):
        text = read_fixture(fixture_path, "broken_right_rep.json")
        with pytest.raises(RepresentationValidationError):
            parse_rep(text)
        assert parse_rep(text, validate=False).dim_v == 1

    @pytest.mark.unit
    def test_wrong_matrix_size(self):
        text = json.dumps({"algebra": "L2", "dimV": 1, "l": [[["0"]]], "r": [[["0"]], [["0"]]]})
        with pytest.raises(DocumentError) as exc_info:
            parse_rep(text)
        assert exc_info.value.location == "l"

    @pytest.mark.unit
    def test_unknown_algebra_name(self):
        text = json.dumps({"algebra": "sl3", "dimV": 1, "l": [], "r": []})
        with pytest.raises(KeyError):
            parse_rep(text)

    @pytest.mark.unit
    def test_omnirep_documents(self, l2, fixture_path):
        document = parse_omnirep_document(read_fixture(fixture_path, "l2_graph_omnirep.json"))
        assert document.rho == adjoint_omnirep(l2)
        assert document.graph_phi is not None
        bad = read_fixture(fixture_path, "l2_bad_omnirep.json")
        with pytest.raises(OmniRepValidationError):
            parse_omnirep(bad)
        assert parse_omnirep_document(bad, validate=False).graph_phi is None


class TestDocumentKind:
    """Kinds are told apart by their keys."""

    @pytest.mark.unit
    @pytest.mark.parametrize("data,kind", [
        ({"dim": 1, "bracket": []}, "algebra"),
        ({"algebra": "L2", "l": [], "r": []}, "rep"),
        ({"algebra": "L2", "phi": [], "theta": []}, "omnirep"),
    ])
    def test_kinds(self, data, kind):
        assert document_kind(data) == kind

    @pytest.mark.unit
    @pytest.mark.parametrize("data", [{}, [], "L2"])
    def test_unknown(self, data):
        with pytest.raises(DocumentError):
            document_kind(data)


class TestSerialization:
    """Serialized documents parse back to equal objects."""

    @pytest.mark.unit
    def test_catalog_algebras(self):
        for name, alg in catalog().items():
            parsed = parse_algebra(serialize_algebra(alg))
            assert parsed == alg
            assert parsed.name == name

    @pytest.mark.unit
    def test_rep_inline_and_by_name(self, l2):
        rep = adjoint_rep(l2)
        assert parse_rep(serialize_rep(rep)) == rep
        assert rep_to_data(rep, algebra_by_name=True)["algebra"] == "L2"
        assert parse_rep(serialize_rep(rep, algebra_by_name=True)) == rep

    @pytest.mark.unit
    def test_omnirep_with_graph_phi(self, sl2):
        rho = adjoint_omnirep(sl2)
        document = parse_omnirep_document(serialize_omnirep(rho, rho.phi, algebra_by_name=True))
        assert document.rho == rho
        assert np.array_equal(document.graph_phi, rho.phi)

    @pytest.mark.unit
    def test_rationals_are_strings(self):
        data = json.loads(serialize_algebra(catalog()["sl2"]))
        assert all(isinstance(entry[3], str) for entry in data["bracket"])

    @pytest.mark.unit
    def test_dumps_is_deterministic(self, l2):
        text = serialize_rep(adjoint_rep(l2))
        assert text == serialize_rep(adjoint_rep(l2))
        assert text.endswith("}\n")
        assert dumps({"a": 1}) == '{\n  "a": 1\n}\n'


class TestReadDocument:
    """Files on disk."""

    @pytest.mark.unit
    def test_missing_file(self, temp_dir):
        path = f"{temp_dir}/missing.json"
        with pytest.raises(DocumentError) as exc_info:
            read_document(path)
        assert exc_info.value.location == path

    @pytest.mark.unit
    def test_invalid_file_reports_path(self, temp_dir):
        path = f"{temp_dir}/broken.json"
        with open(path, "w", encoding="utf-8") as f:
            f.write("{")
        with pytest.raises(DocumentError) as exc_info:
            read_document(path)
        assert exc_info.value.location == path
        assert "line 1 column" in str(exc_info.value)

    @pytest.mark.unit
    def test_undecodable_file_is_input_error(self, temp_dir):
        path = temp_dir / "latin1.json"
        path.write_bytes(b'{"dim": 1, "\xff": 0}')
        with pytest.raises(InputError) as exc_info:
            read_document(path)
        assert isinstance(exc_info.value, DocumentError)
        assert exc_info.value.location == str(path)
        assert "not valid UTF-8" in str(exc_info.value)
