"""
Multilinear cochains ``c: g^{(x)k} -> W`` stored as dense coefficient tables.

A degree-k cochain on an n-dimensional algebra with values in an
m-dimensional space is an object array of shape ``(n,)*k + (m,)`` whose entry
``[i_1, ..., i_k, a]`` is the a-th coordinate of ``c(e_{i_1}, ..., e_{i_k})``.
Flattening in C order gives the row-major multi-index order with the codomain
index varying fastest; coboundary matrices use the same order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence, Tuple

import numpy as np

from .algebra import LeibnizAlgebra
from .linalg import (
    DimensionError,
    InputError,
    Matrix,
    Scalar,
    Vector,
    as_rational_array,
    as_vector,
    freeze,
    is_zero_array,
    to_rational,
    zeros,
)


class CochainError(InputError):
    """Raised when cochains are combined or evaluated inconsistently."""
    pass


def multi_indices(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """All k-tuples over range(n) in row-major (lexicographic) order."""
    return itertools.product(range(n), repeat=k)


def cochain_shape(degree: int, arity_dim: int, codomain_dim: int) -> Tuple[int, ...]:
    return (arity_dim,) * degree + (codomain_dim,)


@dataclass(frozen=True, eq=False)
class Cochain:
    degree: int
    arity_dim: int
    codomain_dim: int
    coeffs: np.ndarray

    def __post_init__(self):
        if self.degree < 0:
            raise CochainError(f"Cochain degree must be non-negative, got {self.degree}")
        shape = cochain_shape(self.degree, self.arity_dim, self.codomain_dim)
        object.__setattr__(self, "coeffs", freeze(as_rational_array(self.coeffs, shape)))

    @classmethod
    def zero(cls, degree: int, arity_dim: int, codomain_dim: int) -> "Cochain":
        return cls(degree, arity_dim, codomain_dim, zeros(cochain_shape(degree, arity_dim, codomain_dim)))

    @classmethod
    def from_function(cls, degree: int, arity_dim: int, codomain_dim: int,
                      fn: Callable[[Tuple[int, ...]], Sequence[Scalar]]) -> "Cochain":
        """Tabulate ``fn(indices)`` (0-based basis multi-index -> codomain vector)."""
        table = zeros(cochain_shape(degree, arity_dim, codomain_dim))
        for indices in multi_indices(arity_dim, degree):
            table[indices] = as_vector(fn(indices), codomain_dim, f"value at {indices}")
        return cls(degree, arity_dim, codomain_dim, table)

    @classmethod
    def basis_element(cls, degree: int, arity_dim: int, codomain_dim: int,
                      indices: Tuple[int, ...], target: int) -> "Cochain":
        table = zeros(cochain_shape(degree, arity_dim, codomain_dim))
        table[tuple(indices) + (target,)] = to_rational(1)
        return cls(degree, arity_dim, codomain_dim, table)

    @classmethod
    def from_flat(cls, degree: int, arity_dim: int, codomain_dim: int,
                  flat: Sequence[Scalar]) -> "Cochain":
        shape = cochain_shape(degree, arity_dim, codomain_dim)
        flat = as_vector(flat, int(np.prod(shape, dtype=object)), "flat coefficient table")
        table = np.empty(shape, dtype=object)
        table.flat[:] = flat
        return cls(degree, arity_dim, codomain_dim, table)

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.coeffs.shape

    @property
    def size(self) -> int:
        return self.coeffs.size

    def flat(self) -> Vector:
        return tuple(self.coeffs.flat)

    def value(self, indices: Sequence[int]) -> Vector:
        """c(e_{i_1}, ..., e_{i_k}) for 0-based indices."""
        if len(indices) != self.degree:
            raise CochainError(f"Degree-{self.degree} cochain evaluated on {len(indices)} basis vectors")
        return tuple(self.coeffs[tuple(indices)])

    def evaluate(self, *args: Sequence[Scalar]) -> Vector:
        """Multilinear evaluation on coordinate vectors."""
        if len(args) != self.degree:
            raise CochainError(f"Degree-{self.degree} cochain evaluated on {len(args)} arguments")
        vectors = [np.array(as_vector(arg, self.arity_dim, "cochain argument"), dtype=object) for arg in args]
        if self.degree and not self.arity_dim:
            return (to_rational(0),) * self.codomain_dim
        table = self.coeffs
        for vec in vectors:
            table = np.tensordot(vec, table, axes=([0], [0]))
        return tuple(to_rational(v) for v in np.asarray(table, dtype=object).reshape(-1))

    def is_zero(self) -> bool:
        return is_zero_array(self.coeffs)

    def _check_compatible(self, other: "Cochain") -> None:
        if (self.degree, self.arity_dim, self.codomain_dim) != (other.degree, other.arity_dim, other.codomain_dim):
            raise CochainError(
                f"Incompatible cochains: C^{self.degree}({self.arity_dim}, {self.codomain_dim}) "
                f"vs C^{other.degree}({other.arity_dim}, {other.codomain_dim})"
            )

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        return Cochain(self.degree, self.arity_dim, self.codomain_dim, self.coeffs + other.coeffs)

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        return Cochain(self.degree, self.arity_dim, self.codomain_dim, self.coeffs - other.coeffs)

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def scale(self, scalar: Scalar) -> "Cochain":
        return Cochain(self.degree, self.arity_dim, self.codomain_dim, self.coeffs * to_rational(scalar))

    def map_codomain(self, matrix: Matrix) -> "Cochain":
        """Post-compose with a linear map W -> W' given as a (dim W') x (dim W) matrix."""
        if matrix.cols != self.codomain_dim:
            raise DimensionError(
                f"Cannot post-compose a {self.codomain_dim}-valued cochain with a {matrix.rows}x{matrix.cols} matrix"
            )
        if matrix.rows == 0 or self.codomain_dim == 0:
            return Cochain.zero(self.degree, self.arity_dim, matrix.rows)
        table = np.tensordot(self.coeffs, matrix.array, axes=([self.degree], [1]))
        return Cochain(self.degree, self.arity_dim, matrix.rows, table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.shape == other.shape and self.degree == other.degree and bool(
            np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.arity_dim, self.codomain_dim, self.flat()))

    def __repr__(self) -> str:
        nonzero = sum(1 for v in self.coeffs.flat if v != 0)
        return f"<Cochain degree={self.degree} n={self.arity_dim} m={self.codomain_dim} nonzero={nonzero}>"


def bracket_cochain(alg: LeibnizAlgebra) -> Cochain:
    """The bracket of ``alg`` as a g-valued 2-cochain."""
    return Cochain(2, alg.dim, alg.dim, alg.constants)


def algebra_from_cochain(alpha: Cochain, name: str = "") -> LeibnizAlgebra:
    """Inverse of :func:`bracket_cochain`; the result is not checked for the identity."""
    if alpha.degree != 2 or alpha.arity_dim != alpha.codomain_dim:
        raise CochainError("A bracket must be a g-valued 2-cochain")
    return LeibnizAlgebra(alpha.arity_dim, np.array(alpha.coeffs, dtype=object), name)


def identity_cochain(dim: int) -> Cochain:
    """id: g -> g as a 1-cochain."""
    table = zeros((dim, dim))
    for i in range(dim):
        table[i, i] = to_rational(1)
    return Cochain(1, dim, dim, table)
