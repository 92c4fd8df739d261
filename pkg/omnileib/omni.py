"""
The omni-Lie algebra ol(V) = gl(V) (+) V and omni-representations.

The bracket is the (non-skew) left Leibniz bracket

    [[A + u, B + v]] = [A, B] + A v

An omni-representation is a homomorphism rho = phi + theta: g -> ol(V); it
splits into

    phi([x, y]) = [phi(x), phi(y)]      ("phi" equation)
    theta([x, y]) = phi(x) theta(y)     ("theta" equation)

A map phi: V -> gl(V) is an embedding tensor when its graph
G_phi = {phi(u) + u} is closed under the bracket, i.e.
[phi(u), phi(v)] = phi(phi(u) v).

Elements are flattened as (A row-major, then u), a vector of length d^2 + d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .algebra import LeibnizAlgebra, derived_subalgebra, left_matrix, require_leibniz
from .linalg import (
    DimensionError,
    Matrix,
    Scalar,
    VerificationError,
    Vector,
    as_rational_array,
    as_vector,
    freeze,
    is_zero_array,
    unit_vector,
    vector_add,
    vector_scale,
    zero_vector,
    zeros,
)
from .logger import logger
from .representations import Representation, dual_tensor_rep, require_rep


class OmniRepValidationError(VerificationError):
    """Raised when rho is not a homomorphism into ol(V)."""

    def __init__(self, check: "OmniRepCheck"):
        super().__init__(check.describe())
        self.check = check


class GraphError(VerificationError):
    """Raised when phi is not an embedding tensor or rho does not factor through its graph."""
    pass


@dataclass(frozen=True)
class OmniElement:
    """A + u in gl(V) (+) V."""
    matrix: Matrix
    vector: Vector

    def __post_init__(self):
        if self.matrix.rows != self.matrix.cols:
            raise DimensionError(f"gl(V) part must be square, got {self.matrix.rows}x{self.matrix.cols}")
        object.__setattr__(self, "vector", as_vector(self.vector, self.matrix.rows, "V part"))

    @property
    def d(self) -> int:
        return self.matrix.rows

    @classmethod
    def zero(cls, d: int) -> "OmniElement":
        return cls(Matrix.zeros(d), zero_vector(d))

    @classmethod
    def from_coordinates(cls, coords: Sequence[Scalar], d: int) -> "OmniElement":
        coords = as_vector(coords, d * d + d, "omni coordinates")
        return cls(Matrix.from_flat(coords[:d * d], d, d), coords[d * d:])

    def coordinates(self) -> Vector:
        return self.matrix.flatten() + self.vector

    def __add__(self, other: "OmniElement") -> "OmniElement":
        return OmniElement(self.matrix + other.matrix, vector_add(self.vector, other.vector))

    def scale(self, scalar: Scalar) -> "OmniElement":
        return OmniElement(self.matrix.scale(scalar), vector_scale(scalar, self.vector))

    def is_zero(self) -> bool:
        return self.matrix.is_zero() and all(v == 0 for v in self.vector)


def omni_bracket(x: OmniElement, y: OmniElement) -> OmniElement:
    """[[A + u, B + v]] = [A, B] + A v."""
    if x.d != y.d:
        raise DimensionError(f"Cannot bracket elements of ol(V) with dim V = {x.d} and {y.d}")
    return OmniElement(x.matrix.commutator(y.matrix), x.matrix.apply(y.vector))


# ---------------------------------------------------------------------------
# Omni-representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OmniRep:
    """rho = phi + theta with phi[i] = phi(e_i) (d x d) and theta[i] = theta(e_i) (length d)."""
    algebra: LeibnizAlgebra
    d: int
    phi: np.ndarray
    theta: np.ndarray
    name: str = ""

    def __post_init__(self):
        n, d = self.algebra.dim, self.d
        if d < 0:
            raise DimensionError(f"Module dimension must be non-negative, got {d}")
        object.__setattr__(self, "phi", freeze(as_rational_array(self.phi, (n, d, d))))
        object.__setattr__(self, "theta", freeze(as_rational_array(self.theta, (n, d))))

    @property
    def n(self) -> int:
        return self.algebra.dim

    def element(self, i: int) -> OmniElement:
        """rho(e_i) for a 0-based index."""
        return OmniElement(Matrix.from_array(self.phi[i]), tuple(self.theta[i]))

    def image_of(self, x: Sequence[Scalar]) -> OmniElement:
        """rho(x) for a coordinate vector x."""
        x = as_vector(x, self.n, "algebra element")
        result = OmniElement.zero(self.d)
        for i, coeff in enumerate(x):
            if coeff != 0:
                result = result + self.element(i).scale(coeff)
        return result

    def coordinate_rows(self) -> List[Vector]:
        """Rows rho(e_1), ..., rho(e_n) in flattened coordinates."""
        return [self.element(i).coordinates() for i in range(self.n)]

    def phi_rep(self) -> Representation:
        """(V, phi, 0)."""
        n, d = self.n, self.d
        return Representation(self.algebra, d, self.phi, zeros((n, d, d)), f"{self.name or 'rho'}:phi")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OmniRep):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.d == other.d
            and bool(np.array_equal(self.phi, other.phi))
            and bool(np.array_equal(self.theta, other.theta))
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.d, tuple(self.phi.flat), tuple(self.theta.flat)))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<OmniRep{label} of {self.algebra!r} on dim {self.d}>"


@dataclass(frozen=True)
class OmniRepCheck:
    """Verdict of :func:`omnirep_check`; ``pair`` is 1-based and ``equation`` is "phi" or "theta"."""
    ok: bool
    equation: Optional[str] = None
    pair: Optional[Tuple[int, int]] = None
    name: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        label = self.name or "omni-representation"
        if self.ok:
            return f"{label}: rho is a homomorphism into ol(V)"
        i, j = self.pair
        text = {
            "phi": "phi([x,y]) = [phi(x), phi(y)]",
            "theta": "theta([x,y]) = phi(x) theta(y)",
        }[self.equation]
        return f"{label}: {text} fails at (x, y) = (e{i}, e{j})"


def _split_failure(rho: OmniRep) -> Optional[Tuple[str, Tuple[int, int]]]:
    constants = rho.algebra.constants
    n = rho.n
    for equation in ("phi", "theta"):
        for i in range(n):
            for j in range(n):
                bracket = constants[i, j]
                if equation == "phi":
                    lhs = np.tensordot(bracket, rho.phi, axes=([0], [0]))
                    rhs = rho.phi[i].dot(rho.phi[j]) - rho.phi[j].dot(rho.phi[i])
                else:
                    lhs = np.tensordot(bracket, rho.theta, axes=([0], [0]))
                    rhs = rho.phi[i].dot(rho.theta[j])
                if not is_zero_array(lhs - rhs):
                    return equation, (i + 1, j + 1)
    return None


def _direct_failure(rho: OmniRep) -> Optional[Tuple[int, int]]:
    for i in range(rho.n):
        for j in range(rho.n):
            lhs = omni_bracket(rho.element(i), rho.element(j))
            rhs = rho.image_of(rho.algebra.basis_bracket(i, j))
            if lhs != rhs:
                return i + 1, j + 1
    return None


def omnirep_check(rho: OmniRep) -> OmniRepCheck:
    """Check the split equations and, independently, the homomorphism condition.

    The two verdicts must agree; a disagreement is an internal error.
    """
    split = _split_failure(rho)
    direct = _direct_failure(rho)
    if (split is None) != (direct is None):
        message = f"{rho!r}: split equations and homomorphism condition disagree ({split} vs {direct})"
        logger.error(message)
        raise VerificationError(message)
    if split is None:
        return OmniRepCheck(True, name=rho.name)
    equation, pair = split
    logger.debug(f"{rho!r}: {equation} equation fails at {pair}")
    return OmniRepCheck(False, equation, pair, rho.name)


def require_omnirep(rho: OmniRep) -> OmniRep:
    check = omnirep_check(rho)
    if not check:
        logger.error(check.describe())
        raise OmniRepValidationError(check)
    return rho


def from_usual_rep(rep: Representation) -> OmniRep:
    """rho = (l* (x) 1 + 1 (x) l) + r on V* (x) V."""
    require_rep(rep)
    tensor = dual_tensor_rep(rep)
    n, d = rep.n, rep.dim_v
    theta = np.asarray(rep.right, dtype=object).reshape(n, d * d)
    return OmniRep(rep.algebra, d * d, tensor.left, theta, f"{rep.name or 'rep'}:omni")


def adjoint_omnirep(alg: LeibnizAlgebra) -> OmniRep:
    """ad_L + id."""
    require_leibniz(alg)
    n = alg.dim
    phi = zeros((n, n, n))
    theta = zeros((n, n))
    for i in range(n):
        phi[i] = left_matrix(alg, i)
        theta[i, i] = 1
    return OmniRep(alg, n, phi, theta, "adjoint")


def trivial_omnirep(alg: LeibnizAlgebra, xi: Sequence[Scalar]) -> OmniRep:
    """phi = 0, theta = xi on V = Q."""
    n = alg.dim
    theta = zeros((n, 1))
    theta[:, 0] = as_vector(xi, n, "functional")
    return OmniRep(alg, 1, zeros((n, 1, 1)), theta, "trivial")


def trivial_omnireps(alg: LeibnizAlgebra) -> List[OmniRep]:
    """One trivial omni-representation per basis functional of the annihilator of [g, g]."""
    return [trivial_omnirep(alg, xi) for xi in derived_subalgebra(alg).annihilator()]


# ---------------------------------------------------------------------------
# Graphs and embedding tensors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphCheck:
    """Verdict of :func:`graph_check`; ``pair`` is 1-based (u, v)."""
    ok: bool
    pair: Optional[Tuple[int, int]] = None
    defect: Optional[Matrix] = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "phi is an embedding tensor: [phi(u), phi(v)] = phi(phi(u) v)"
        u, v = self.pair
        return f"[phi(u), phi(v)] = phi(phi(u) v) fails at (u, v) = (f{u}, f{v})"


def as_phi(phi) -> np.ndarray:
    """Coerce phi(f_1), ..., phi(f_d) to a (d, d, d) rational array."""
    arr = np.asarray(phi, dtype=object)
    if arr.ndim != 3 or arr.shape[0] != arr.shape[1] or arr.shape[1] != arr.shape[2]:
        raise DimensionError(f"phi must have shape (d, d, d), got {arr.shape}")
    return as_rational_array(arr)


def phi_of(phi: np.ndarray, v: Sequence[Scalar]) -> np.ndarray:
    """phi(v) = sum_w v_w phi(f_w)."""
    d = phi.shape[0]
    if d == 0:
        return zeros((0, 0))
    return np.tensordot(np.array(as_vector(v, d), dtype=object), phi, axes=([0], [0]))


def graph_check(phi) -> GraphCheck:
    phi = as_phi(phi)
    d = phi.shape[0]
    for u in range(d):
        for v in range(d):
            lhs = phi[u].dot(phi[v]) - phi[v].dot(phi[u])
            rhs = phi_of(phi, tuple(phi[u][:, v]))
            if not is_zero_array(lhs - rhs):
                return GraphCheck(False, (u + 1, v + 1), Matrix.from_array(lhs - rhs))
    return GraphCheck(True)


def graph_elements(phi) -> List[OmniElement]:
    """phi(f_u) + f_u for each basis vector of V."""
    phi = as_phi(phi)
    d = phi.shape[0]
    return [OmniElement(Matrix.from_array(phi[u]), unit_vector(d, u)) for u in range(d)]


def in_graph(phi, element: OmniElement) -> bool:
    phi = as_phi(phi)
    return bool(np.array_equal(phi_of(phi, element.vector), element.matrix.array))


def graph_closure_check(phi) -> bool:
    """Direct test that G_phi is closed under the bracket of ol(V)."""
    elements = graph_elements(phi)
    return all(in_graph(phi, omni_bracket(x, y)) for x in elements for y in elements)


def induced_bracket(phi, name: str = "") -> LeibnizAlgebra:
    """(V, [u, v]_phi = phi(u) v)."""
    check = graph_check(phi)
    if not check:
        raise GraphError(check.describe())
    phi = as_phi(phi)
    d = phi.shape[0]
    table = zeros((d, d, d))
    for i in range(d):
        table[i] = phi[i].T
    return LeibnizAlgebra(d, table, name or "induced")


def graph_factorization_failure(rho: OmniRep, phi) -> Optional[int]:
    """First 1-based i with rho(e_i) != phi(theta(e_i)) + theta(e_i), or None."""
    phi = as_phi(phi)
    if phi.shape[0] != rho.d:
        raise DimensionError(f"phi acts on dim {phi.shape[0]}, rho on dim {rho.d}")
    for i in range(rho.n):
        if not np.array_equal(rho.phi[i], phi_of(phi, tuple(rho.theta[i]))):
            return i + 1
    return None


def induced_lr(rho: OmniRep, phi) -> Representation:
    """(V, l, r) with l_x u = phi(theta(x)) u and r_x u = phi(u) theta(x)."""
    check = graph_check(phi)
    if not check:
        raise GraphError(check.describe())
    require_omnirep(rho)
    failure = graph_factorization_failure(rho, phi)
    if failure is not None:
        raise GraphError(f"rho(e{failure}) is not phi(theta(e{failure})) + theta(e{failure}); image not in G_phi")
    phi = as_phi(phi)
    n, d = rho.n, rho.d
    left = zeros((n, d, d))
    right = zeros((n, d, d))
    for i in range(n):
        theta_i = tuple(rho.theta[i])
        left[i] = phi_of(phi, theta_i)
        for b in range(d):
            right[i][:, b] = phi[b].dot(np.array(theta_i, dtype=object))
    rep = Representation(rho.algebra, d, left, right, "induced")
    return require_rep(rep)
