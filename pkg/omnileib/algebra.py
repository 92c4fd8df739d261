"""
Finite-dimensional Leibniz algebras given by structure constants.

An algebra of dimension n carries a rank-3 table ``c`` with
``[e_i, e_j] = sum_k c[i, j, k] e_k`` (0-based in code, 1-based in documents
and in every user-facing witness). The identity checked is the left Leibniz
identity::

    [x, [y, z]] = [[x, y], z] + [y, [x, z]]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .linalg import (
    DimensionError,
    Scalar,
    Subspace,
    VerificationError,
    Vector,
    as_rational_array,
    as_vector,
    format_rational,
    freeze,
    to_rational,
    unit_vector,
    vector_add,
    vector_sub,
    zeros,
)
from .logger import logger


class AlgebraValidationError(VerificationError):
    """Raised when a structure table violates the Leibniz identity."""

    def __init__(self, check: "LeibnizCheck"):
        super().__init__(check.describe())
        self.check = check


@dataclass(frozen=True, eq=False)
class LeibnizAlgebra:
    """Structure constants of a (candidate) Leibniz algebra.

    Construction does not enforce the identity; use :func:`is_leibniz` or
    :func:`require_leibniz`.
    """
    dim: int
    constants: np.ndarray
    name: str = field(default="")

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionError(f"Algebra dimension must be non-negative, got {self.dim}")
        n = self.dim
        object.__setattr__(self, "constants", freeze(as_rational_array(self.constants, (n, n, n))))

    @classmethod
    def abelian(cls, dim: int, name: str = "") -> "LeibnizAlgebra":
        return cls(dim, zeros((dim, dim, dim)), name or f"abelian{dim}")

    @classmethod
    def from_entries(cls, dim: int, entries: Iterable[Tuple[int, int, int, Scalar]],
                     name: str = "") -> "LeibnizAlgebra":
        """Build from sparse 1-based entries ``(i, j, k, value)``; omitted entries are zero."""
        table = zeros((dim, dim, dim))
        seen = set()
        for i, j, k, value in entries:
            for index in (i, j, k):
                if not 1 <= index <= dim:
                    raise DimensionError(f"Index {index} out of range 1..{dim}")
            if (i, j, k) in seen:
                raise DimensionError(f"Duplicate structure constant ({i}, {j}, {k})")
            seen.add((i, j, k))
            table[i - 1, j - 1, k - 1] = to_rational(value)
        return cls(dim, table, name)

    def entries(self) -> list:
        """Sparse 1-based entries ``[i, j, k, "p/q"]`` in lexicographic order."""
        return [
            [i + 1, j + 1, k + 1, format_rational(self.constants[i, j, k])]
            for i, j, k in np.ndindex(*self.constants.shape)
            if self.constants[i, j, k] != 0
        ]

    def with_constant(self, i: int, j: int, k: int, value: Scalar) -> "LeibnizAlgebra":
        """Copy with one structure constant replaced (1-based indices)."""
        table = np.array(self.constants, dtype=object)
        table[i - 1, j - 1, k - 1] = to_rational(value)
        return LeibnizAlgebra(self.dim, table, self.name)

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        return bracket_eval(self, x, y)

    def basis_bracket(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for 0-based indices."""
        return tuple(self.constants[i, j, :])

    @cached_property
    def defect_tensor(self) -> np.ndarray:
        """D[i, j, k, :] = [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]]."""
        n = self.dim
        if n == 0:
            return freeze(zeros((0, 0, 0, 0)))
        c = self.constants
        outer = np.tensordot(c, c, axes=([2], [1])).transpose(2, 0, 1, 3)
        inner = np.tensordot(c, c, axes=([2], [0]))
        return freeze(outer - inner - outer.transpose(1, 0, 2, 3))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LeibnizAlgebra):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self.constants, other.constants))

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self.constants.flat)))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<LeibnizAlgebra{label} dim={self.dim} nonzero={len(self.entries())}>"


@dataclass(frozen=True)
class LeibnizCheck:
    """Verdict of :func:`is_leibniz`; the witness is a 1-based basis triple."""
    ok: bool
    witness: Optional[Tuple[int, int, int]] = None
    defect: Optional[Vector] = None
    name: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        label = self.name or "algebra"
        if self.ok:
            return f"{label}: Leibniz identity holds"
        i, j, k = self.witness
        defect = ", ".join(format_rational(v) for v in self.defect)
        return (
            f"{label}: Leibniz identity fails at (e{i}, e{j}, e{k}); "
            f"defect [e{i},[e{j},e{k}]] - [[e{i},e{j}],e{k}] - [e{j},[e{i},e{k}]] = ({defect})"
        )


def _check_length(alg: LeibnizAlgebra, v: Sequence[Scalar], what: str) -> Vector:
    return as_vector(v, alg.dim, what)


def bracket_eval(alg: LeibnizAlgebra, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    """sum_{i,j} x_i y_j [e_i, e_j] as a coordinate vector."""
    x = _check_length(alg, x, "left argument")
    y = _check_length(alg, y, "right argument")
    if alg.dim == 0:
        return ()
    xv = np.array(x, dtype=object)
    yv = np.array(y, dtype=object)
    partial = np.tensordot(xv, alg.constants, axes=([0], [0]))
    return tuple(to_rational(v) for v in np.tensordot(yv, partial, axes=([0], [0])))


def leibniz_defect(alg: LeibnizAlgebra, i: int, j: int, k: int) -> Vector:
    """Defect of the identity on basis vectors (1-based), evaluated bracket by bracket."""
    n = alg.dim
    ei, ej, ek = (unit_vector(n, t - 1) for t in (i, j, k))
    lhs = bracket_eval(alg, ei, bracket_eval(alg, ej, ek))
    rhs = vector_add(
        bracket_eval(alg, bracket_eval(alg, ei, ej), ek),
        bracket_eval(alg, ej, bracket_eval(alg, ei, ek)),
    )
    return vector_sub(lhs, rhs)


def is_leibniz(alg: LeibnizAlgebra) -> LeibnizCheck:
    """Check the identity on all basis triples; report the first failure in (i, j, k) order."""
    defects = alg.defect_tensor
    for i, j, k in np.ndindex(*defects.shape[:3]):
        vec = defects[i, j, k]
        if any(v != 0 for v in vec):
            witness = (i + 1, j + 1, k + 1)
            logger.debug(f"Leibniz identity fails for {alg!r} at {witness}")
            return LeibnizCheck(False, witness, tuple(to_rational(v) for v in vec), alg.name)
    return LeibnizCheck(True, name=alg.name)


def require_leibniz(alg: LeibnizAlgebra) -> LeibnizAlgebra:
    check = is_leibniz(alg)
    if not check:
        logger.error(check.describe())
        raise AlgebraValidationError(check)
    return alg


def is_lie(alg: LeibnizAlgebra) -> bool:
    """True when the bracket is skew-symmetric ([x, x] = 0) and the identity holds."""
    c = alg.constants
    skew = all(c[i, j, k] == -c[j, i, k] for i, j, k in np.ndindex(*c.shape))
    return skew and is_leibniz(alg).ok


def derived_subalgebra(alg: LeibnizAlgebra) -> Subspace:
    """[g, g] with its RREF basis (pivot rows of the span of all [e_i, e_j])."""
    n = alg.dim
    values = [alg.basis_bracket(i, j) for i in range(n) for j in range(n)]
    derived = Subspace.span(values, n)
    logger.debug(f"Derived subalgebra of {alg!r} has dimension {derived.dim}")
    return derived


def left_matrix(alg: LeibnizAlgebra, i: int) -> np.ndarray:
    """Matrix of ad_L(e_i): column j holds [e_i, e_j] (0-based i)."""
    return alg.constants[i].T


def right_matrix(alg: LeibnizAlgebra, i: int) -> np.ndarray:
    """Matrix of ad_R(e_i): column j holds [e_j, e_i] (0-based i)."""
    return alg.constants[:, i, :].T


__all__ = [
    "AlgebraValidationError",
    "LeibnizAlgebra",
    "LeibnizCheck",
    "bracket_eval",
    "derived_subalgebra",
    "is_leibniz",
    "is_lie",
    "leibniz_defect",
    "left_matrix",
    "require_leibniz",
    "right_matrix",
]
