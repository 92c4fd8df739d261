"""
JSON documents for algebras, representations and omni-representations.

Values are rational strings ``"p/q"`` (plain integers are accepted); indices
in sparse bracket entries are 1-based. An ``algebra`` field is either a
catalog name or an inline algebra document.

Algebra::

    {"name": "L2", "dim": 2, "bracket": [[2, 2, 1, "1"]]}

Representation::

    {"algebra": "L2", "dimV": 2, "l": [[["0","0"],["0","0"]], ...], "r": [...]}

Omni-representation (``graph_phi`` optional, d matrices d x d)::

    {"algebra": "L2", "dimV": 1, "phi": [[["0"]], [["0"]]], "theta": [["0"], ["1"]]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, List, Optional

import numpy as np

from .algebra import LeibnizAlgebra, require_leibniz
from .linalg import InputError, format_rational, to_rational, zeros
from .logger import logger
from .omni import OmniRep, as_phi, require_omnirep
from .representations import Representation, require_rep

KIND_ALGEBRA = "algebra"
KIND_REP = "rep"
KIND_OMNIREP = "omnirep"


class DocumentError(InputError):
    """Raised for malformed documents; ``location`` is a JSON path such as ``bracket[2][1]``."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


@dataclass(frozen=True)
class OmniRepDocument:
    rho: OmniRep
    graph_phi: Optional[np.ndarray] = None


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"Invalid JSON: {e.msg}", f"line {e.lineno} column {e.colno}") from None


def document_kind(data: Any) -> str:
    if not isinstance(data, dict):
        raise DocumentError("Document must be a JSON object")
    if "phi" in data or "theta" in data:
        return KIND_OMNIREP
    if "l" in data or "r" in data:
        return KIND_REP
    if "bracket" in data or "dim" in data:
        return KIND_ALGEBRA
    raise DocumentError("Cannot tell the document kind; expected bracket, l/r or phi/theta keys")


def _require(data: dict, key: str, location: str) -> Any:
    if key not in data:
        raise DocumentError(f"Missing key {key!r}", location or "$")
    return data[key]


def _count(value: Any, location: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise DocumentError(f"Expected a non-negative integer, got {value!r}", location)
    return value


def _rational(value: Any, location: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentError(f"Expected a rational string, got {value!r}", location)
    try:
        return to_rational(value)
    except InputError as e:
        raise DocumentError(str(e), location) from None


def _vector(value: Any, length: int, location: str) -> list:
    if not isinstance(value, list) or len(value) != length:
        raise DocumentError(f"Expected a list of {length} values", location)
    return [_rational(v, f"{location}[{a}]") for a, v in enumerate(value)]


def _matrix(value: Any, size: int, location: str) -> list:
    if not isinstance(value, list) or len(value) != size:
        raise DocumentError(f"Expected a {size}x{size} matrix", location)
    return [_vector(row, size, f"{location}[{a}]") for a, row in enumerate(value)]


def _stack(value: Any, count: int, size: int, location: str) -> np.ndarray:
    if not isinstance(value, list) or len(value) != count:
        raise DocumentError(f"Expected {count} matrices", location)
    out = zeros((count, size, size))
    for i, m in enumerate(value):
        rows = _matrix(m, size, f"{location}[{i}]")
        for a in range(size):
            out[i, a, :] = rows[a]
    return out


def algebra_from_data(data: Any, location: str = "", validate: bool = True) -> LeibnizAlgebra:
    """Build an algebra from a catalog name or an inline algebra object."""
    if isinstance(data, str):
        from .catalog import get_algebra
        return get_algebra(data)
    if not isinstance(data, dict):
        raise DocumentError("Algebra must be a catalog name or an object", location or "$")
    prefix = f"{location}." if location else ""
    dim = _count(_require(data, "dim", location), f"{prefix}dim")
    bracket = _require(data, "bracket", location)
    if not isinstance(bracket, list):
        raise DocumentError("Expected a list of [i, j, k, value] entries", f"{prefix}bracket")
    table = zeros((dim, dim, dim))
    seen = set()
    for e, entry in enumerate(bracket):
        where = f"{prefix}bracket[{e}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise DocumentError("Expected [i, j, k, value]", where)
        indices = []
        for slot in range(3):
            index = entry[slot]
            if isinstance(index, bool) or not isinstance(index, int) or not 1 <= index <= dim:
                raise DocumentError(f"Index {index!r} out of range 1..{dim}", f"{where}[{slot}]")
            indices.append(index)
        key = tuple(indices)
        if key in seen:
            raise DocumentError(f"Duplicate entry {list(key)}", where)
        seen.add(key)
        i, j, k = key
        table[i - 1, j - 1, k - 1] = _rational(entry[3], f"{where}[3]")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise DocumentError("Expected a string", f"{prefix}name")
    alg = LeibnizAlgebra(dim, table, name)
    if validate:
        require_leibniz(alg)
    return alg


def parse_algebra(text: str, validate: bool = True) -> LeibnizAlgebra:
    return algebra_from_data(load_json(text), validate=validate)


def _algebra_and_dim(data: Any, validate: bool):
    if not isinstance(data, dict):
        raise DocumentError("Document must be a JSON object")
    alg = algebra_from_data(_require(data, "algebra", ""), "algebra", validate)
    d = _count(_require(data, "dimV", ""), "dimV")
    return alg, d


def rep_from_data(data: Any, validate: bool = True) -> Representation:
    alg, d = _algebra_and_dim(data, validate)
    left = _stack(_require(data, "l", ""), alg.dim, d, "l")
    right = _stack(_require(data, "r", ""), alg.dim, d, "r")
    rep = Representation(alg, d, left, right, data.get("name", "") or "")
    if validate:
        require_rep(rep)
    return rep


def parse_rep(text: str, validate: bool = True) -> Representation:
    return rep_from_data(load_json(text), validate)


def omnirep_document_from_data(data: Any, validate: bool = True) -> OmniRepDocument:
    alg, d = _algebra_and_dim(data, validate)
    phi = _stack(_require(data, "phi", ""), alg.dim, d, "phi")
    theta_data = _require(data, "theta", "")
    if not isinstance(theta_data, list) or len(theta_data) != alg.dim:
        raise DocumentError(f"Expected {alg.dim} vectors", "theta")
    theta = zeros((alg.dim, d))
    for i, vec in enumerate(theta_data):
        theta[i, :] = _vector(vec, d, f"theta[{i}]")
    rho = OmniRep(alg, d, phi, theta, data.get("name", "") or "")
    graph_phi = None
    if data.get("graph_phi") is not None:
        graph_phi = as_phi(_stack(data["graph_phi"], d, d, "graph_phi"))
    if validate:
        require_omnirep(rho)
    return OmniRepDocument(rho, graph_phi)


def parse_omnirep_document(text: str, validate: bool = True) -> OmniRepDocument:
    return omnirep_document_from_data(load_json(text), validate)


def parse_omnirep(text: str, validate: bool = True) -> OmniRep:
    return parse_omnirep_document(text, validate).rho


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _format_stack(stack: np.ndarray) -> List[List[List[str]]]:
    return [[[format_rational(v) for v in row] for row in m] for m in stack]


def algebra_to_data(alg: LeibnizAlgebra, description: str = "") -> dict:
    data = {}
    if alg.name:
        data["name"] = alg.name
    if description:
        data["description"] = description
    data["dim"] = alg.dim
    data["bracket"] = alg.entries()
    return data


def _algebra_reference(alg: LeibnizAlgebra, by_name: bool) -> Any:
    return alg.name if by_name and alg.name else algebra_to_data(alg)


def rep_to_data(rep: Representation, algebra_by_name: bool = False) -> dict:
    data = {"algebra": _algebra_reference(rep.algebra, algebra_by_name)}
    if rep.name:
        data["name"] = rep.name
    data["dimV"] = rep.dim_v
    data["l"] = _format_stack(rep.left)
    data["r"] = _format_stack(rep.right)
    return data


def omnirep_to_data(rho: OmniRep, graph_phi=None, algebra_by_name: bool = False) -> dict:
    data = {"algebra": _algebra_reference(rho.algebra, algebra_by_name)}
    if rho.name:
        data["name"] = rho.name
    data["dimV"] = rho.d
    data["phi"] = _format_stack(rho.phi)
    data["theta"] = [[format_rational(v) for v in vec] for vec in rho.theta]
    if graph_phi is not None:
        data["graph_phi"] = _format_stack(as_phi(graph_phi))
    return data


def dumps(data: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def serialize_algebra(alg: LeibnizAlgebra) -> str:
    return dumps(algebra_to_data(alg))


def serialize_rep(rep: Representation, algebra_by_name: bool = False) -> str:
    return dumps(rep_to_data(rep, algebra_by_name))


def serialize_omnirep(rho: OmniRep, graph_phi=None, algebra_by_name: bool = False) -> str:
    return dumps(omnirep_to_data(rho, graph_phi, algebra_by_name))


def read_document(path) -> Any:
    """Load JSON from a file path, reporting the path on failure."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise DocumentError(f"Cannot read file: {e.strerror}", str(path)) from None
    except UnicodeDecodeError as e:
        raise DocumentError(f"File is not valid UTF-8: {e.reason}", str(path)) from None
    logger.debug(f"Read document {path}")
    try:
        return load_json(text)
    except DocumentError as e:
        raise DocumentError(str(e), str(path)) from None
