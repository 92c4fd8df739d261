"""
Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a positive
denominator). Dense multilinear data is held in numpy ``object`` arrays of
Fractions; row reduction and ranks are delegated to sympy's ``DomainMatrix``
over ``QQ`` so that elimination never touches floating point.

This module also defines the two root exceptions of the package:

- :class:`InputError` for malformed or dimension-inconsistent input
- :class:`VerificationError` for a failed mathematical check or a broken invariant
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .logger import logger

Rational = Fraction
Vector = Tuple[Fraction, ...]
Scalar = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)


class InputError(ValueError):
    """Raised when input is malformed or dimensionally inconsistent."""
    pass


class VerificationError(RuntimeError):
    """Raised when a mathematical check fails or an invariant is violated."""
    pass


class DimensionError(InputError):
    """Raised when operand shapes do not match."""
    pass


class NotInSpanError(VerificationError):
    """Raised when a vector has no coordinates in a subspace basis."""
    pass


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def to_rational(value: Scalar) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a reduced Fraction.

    Floats and booleans are rejected: a float has already lost exactness.
    """
    if isinstance(value, bool):
        raise InputError(f"Not a rational value: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if not match:
            raise InputError(f"Not a rational value string: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise InputError(f"Zero denominator in {value!r}")
        return Fraction(numerator, denominator)
    raise InputError(f"Not a rational value: {value!r} ({type(value).__name__})")


def format_rational(value: Fraction) -> str:
    """Canonical string form: ``"p"`` for integers, ``"p/q"`` otherwise."""
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# Object arrays of Fractions
# ---------------------------------------------------------------------------

_to_rational_elementwise = np.vectorize(to_rational, otypes=[object])


def zeros(shape: Union[int, Tuple[int, ...]]) -> np.ndarray:
    """A writable object array of exact zeros."""
    return np.full(shape, ZERO, dtype=object)


def as_rational_array(data, shape: Optional[Tuple[int, ...]] = None) -> np.ndarray:
    """Coerce nested data to an object array of Fractions, optionally checking shape."""
    arr = np.asarray(data, dtype=object)
    if shape is not None and arr.shape != tuple(shape):
        raise DimensionError(f"Expected shape {tuple(shape)}, got {arr.shape}")
    if arr.size == 0:
        return zeros(arr.shape)
    return _to_rational_elementwise(arr)


def freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def is_zero_array(arr: np.ndarray) -> bool:
    return all(entry == 0 for entry in np.asarray(arr, dtype=object).flat)


# ---------------------------------------------------------------------------
# Vectors
# ---------------------------------------------------------------------------

def as_vector(values: Iterable[Scalar], length: Optional[int] = None, what: str = "vector") -> Vector:
    vec = tuple(to_rational(v) for v in values)
    if length is not None and len(vec) != length:
        raise DimensionError(f"{what} has length {len(vec)}, expected {length}")
    return vec


def zero_vector(length: int) -> Vector:
    return (ZERO,) * length


def unit_vector(length: int, index: int) -> Vector:
    """The standard basis vector e_index (0-based)."""
    return tuple(ONE if i == index else ZERO for i in range(length))


def vector_add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"Cannot add vectors of lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vector_sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"Cannot subtract vectors of lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vector_scale(scalar: Scalar, v: Vector) -> Vector:
    s = to_rational(scalar)
    return tuple(s * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"Cannot pair vectors of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


# ---------------------------------------------------------------------------
# Dense matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    """An immutable rows x cols matrix with row-major Fraction entries."""
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"Negative matrix shape {self.rows}x{self.cols}")
        entries = tuple(to_rational(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionError(
                f"Matrix {self.rows}x{self.cols} needs {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> "Matrix":
        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for index, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionError(f"Row {index} has {len(row)} entries, expected {cols}")
        return cls(len(rows), cols, tuple(e for row in rows for e in row))

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "Matrix":
        arr = np.asarray(arr, dtype=object)
        if arr.ndim != 2:
            raise DimensionError(f"Expected a 2-dimensional array, got {arr.ndim} dimensions")
        return cls(arr.shape[0], arr.shape[1], tuple(arr.flat))

    @classmethod
    def from_flat(cls, flat: Sequence[Scalar], rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls(size, size, tuple(ONE if i == j else ZERO for i in range(size) for j in range(size)))

    @classmethod
    def unit(cls, size: int, row: int, col: int) -> "Matrix":
        """Matrix unit E_{row,col} (0-based) of a square size x size matrix."""
        return cls(size, size, tuple(
            ONE if (i, j) == (row, col) else ZERO for i in range(size) for j in range(size)
        ))

    # -- views --------------------------------------------------------------

    @cached_property
    def array(self) -> np.ndarray:
        """Read-only object array view of the entries."""
        arr = np.empty((self.rows, self.cols), dtype=object)
        arr.flat[:] = self.entries
        return freeze(arr)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def flatten(self) -> Vector:
        return self.entries

    def is_zero(self) -> bool:
        return is_zero_vector(self.entries)

    # -- arithmetic ---------------------------------------------------------

    def _check_same_shape(self, other: "Matrix", op: str) -> None:
        if self.shape != other.shape:
            raise DimensionError(f"Cannot {op} {self.rows}x{self.cols} and {other.rows}x{other.cols} matrices")

    def transpose(self) -> "Matrix":
        return Matrix.from_array(self.array.T)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other, "add")
        return Matrix(self.rows, self.cols, vector_add(self.entries, other.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other, "subtract")
        return Matrix(self.rows, self.cols, vector_sub(self.entries, other.entries))

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, scalar: Scalar) -> "Matrix":
        return Matrix(self.rows, self.cols, vector_scale(scalar, self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros(self.rows, other.cols)
        return Matrix.from_array(self.array.dot(other.array))

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise DimensionError(f"Cannot apply {self.rows}x{self.cols} matrix to vector of length {len(v)}")
        return tuple(
            dot(self.entries[i * self.cols:(i + 1) * self.cols], v) for i in range(self.rows)
        )

    def commutator(self, other: "Matrix") -> "Matrix":
        """[A, B] = AB - BA."""
        return (self @ other) - (other @ self)


# ---------------------------------------------------------------------------
# Row reduction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RowReduction:
    """Result of exact row reduction."""
    rank: int
    rref: Matrix
    pivot_columns: Tuple[int, ...]


def _qq(value: Fraction):
    return QQ(int(value.numerator), int(value.denominator))


def _from_sympy(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _dense_domain_matrix(m: Matrix) -> DomainMatrix:
    rows = [[_qq(e) for e in row] for row in m.to_rows()]
    return DomainMatrix(rows, m.shape, QQ)


def _as_matrix(m: Union[Matrix, np.ndarray, Sequence[Sequence[Scalar]]]) -> Matrix:
    if isinstance(m, Matrix):
        return m
    if isinstance(m, np.ndarray):
        return Matrix.from_array(m)
    return Matrix.from_rows(m)


def rref_rank(m: Union[Matrix, np.ndarray, Sequence[Sequence[Scalar]]]) -> RowReduction:
    """Exact reduced row echelon form, rank and pivot columns over QQ.

    The reduced form is unique, so the result does not depend on the
    elimination strategy used inside sympy.
    """
    m = _as_matrix(m)
    if m.rows == 0 or m.cols == 0 or m.is_zero():
        return RowReduction(0, Matrix.zeros(m.rows, m.cols), ())
    reduced, pivots = _dense_domain_matrix(m).rref()
    entries = tuple(_from_sympy(e) for row in reduced.to_Matrix().tolist() for e in row)
    return RowReduction(len(pivots), Matrix(m.rows, m.cols, entries), tuple(int(p) for p in pivots))


def rank(m: Union[Matrix, np.ndarray, Sequence[Sequence[Scalar]]]) -> int:
    return rref_rank(m).rank


def kernel_basis(m: Union[Matrix, np.ndarray, Sequence[Sequence[Scalar]]], cols: Optional[int] = None) -> List[Vector]:
    """Basis of {x : m x = 0}, one vector per free column in ascending order.

    ``cols`` is needed only for a matrix with zero rows given as a list.
    """
    if isinstance(m, (list, tuple)) and not m and cols is not None:
        m = Matrix.zeros(0, cols)
    reduction = rref_rank(m)
    ncols = reduction.rref.cols
    pivots = reduction.pivot_columns
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        vec = [ZERO] * ncols
        vec[j] = ONE
        for row, pivot in enumerate(pivots):
            vec[pivot] = -reduction.rref[row, j]
        basis.append(tuple(vec))
    return basis


# ---------------------------------------------------------------------------
# Sparse matrices (coboundary operators)
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SparseMatrix:
    """A rows x cols matrix stored as {(row, col): nonzero value}."""
    rows: int
    cols: int
    entries: Mapping[Tuple[int, int], Fraction] = field(default_factory=dict)

    @classmethod
    def from_accumulator(cls, rows: int, cols: int, acc: Mapping[Tuple[int, int], Fraction]) -> "SparseMatrix":
        return cls(rows, cols, {key: value for key, value in acc.items() if value != 0})

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0 or not self.entries:
            return 0
        rep: Dict[int, Dict[int, object]] = {}
        for (i, j), value in self.entries.items():
            rep.setdefault(i, {})[j] = _qq(value)
        result = DomainMatrix(rep, self.shape, QQ).rank()
        logger.debug(f"Sparse rank of {self.rows}x{self.cols} matrix with {self.nnz} nonzeros: {result}")
        return int(result)

    def column(self, j: int) -> Vector:
        col = [ZERO] * self.rows
        for (i, jj), value in self.entries.items():
            if jj == j:
                col[i] = value
        return tuple(col)

    def to_matrix(self) -> Matrix:
        arr = zeros((self.rows, self.cols))
        for (i, j), value in self.entries.items():
            arr[i, j] = value
        return Matrix.from_array(arr)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (k, j), value in other.entries.items():
            by_row.setdefault(k, []).append((j, value))
        acc: Dict[Tuple[int, int], Fraction] = {}
        for (i, k), left in self.entries.items():
            for j, right in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), ZERO) + left * right
        return SparseMatrix.from_accumulator(self.rows, other.cols, acc)


# ---------------------------------------------------------------------------
# Subspaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of QQ^ambient with its canonical (RREF) basis.

    Coordinates of a vector w in the span are read off the pivot columns:
    ``c_i = w[pivot_i]``; the reconstruction is always checked.
    """
    ambient: int
    basis: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Scalar]], ambient: int) -> "Subspace":
        rows = [as_vector(v, ambient) for v in vectors]
        if not rows:
            return cls(ambient, (), ())
        reduction = rref_rank(Matrix.from_rows(rows, ambient))
        basis = tuple(tuple(reduction.rref.to_rows()[i]) for i in range(reduction.rank))
        return cls(ambient, basis, reduction.pivot_columns)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coeffs: Sequence[Scalar]) -> Vector:
        coeffs = as_vector(coeffs, self.dim, "coordinate vector")
        result = zero_vector(self.ambient)
        for c, b in zip(coeffs, self.basis):
            if c != 0:
                result = vector_add(result, vector_scale(c, b))
        return result

    def coordinates(self, w: Sequence[Scalar]) -> Vector:
        w = as_vector(w, self.ambient)
        coeffs = tuple(w[p] for p in self.pivots)
        if self.combine(coeffs) != w:
            raise NotInSpanError(f"Vector is not in the span of the {self.dim}-dimensional basis")
        return coeffs

    def contains(self, w: Sequence[Scalar]) -> bool:
        try:
            self.coordinates(w)
        except NotInSpanError:
            return False
        return True

    def annihilator(self) -> List[Vector]:
        """Basis of the functionals vanishing on this subspace."""
        if not self.basis:
            return [unit_vector(self.ambient, i) for i in range(self.ambient)]
        return kernel_basis(Matrix.from_rows(self.basis, self.ambient))
