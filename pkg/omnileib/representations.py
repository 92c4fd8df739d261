"""
Representations (V, l, r) of Leibniz algebras.

A representation assigns to each basis vector e_i of g two d x d matrices,
``left[i] = l_{e_i}`` and ``right[i] = r_{e_i}``, subject to

    l_[x,y] = [l_x, l_y]        (left)
    r_[x,y] = [l_x, r_y]        (mixed)
    r_y l_x = -r_y r_x          (right)

This module also builds semidirect products, the 2-cochain induced by the
right action on the (l, 0) semidirect product, and the representation on
V* (x) V = gl(V) with the fixed identification ``A[a, b] = u_a xi_b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .algebra import LeibnizAlgebra, left_matrix, require_leibniz, right_matrix
from .cochains import Cochain
from .linalg import (
    DimensionError,
    Matrix,
    Scalar,
    Subspace,
    VerificationError,
    as_rational_array,
    freeze,
    is_zero_array,
    zeros,
)
from .logger import logger

AXIOMS = ("left", "mixed", "right")

_AXIOM_TEXT = {
    "left": "l_[x,y] = [l_x, l_y]",
    "mixed": "r_[x,y] = [l_x, r_y]",
    "right": "r_y l_x = -r_y r_x",
}


class RepresentationValidationError(VerificationError):
    """Raised when (l, r) is not a representation."""

    def __init__(self, check: "RepCheck"):
        super().__init__(check.describe())
        self.check = check


class InvariantSubspaceError(VerificationError):
    """Raised when a subspace is not stable under the actions."""
    pass


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: LeibnizAlgebra
    dim_v: int
    left: np.ndarray
    right: np.ndarray
    name: str = ""

    def __post_init__(self):
        n, d = self.algebra.dim, self.dim_v
        if d < 0:
            raise DimensionError(f"Module dimension must be non-negative, got {d}")
        object.__setattr__(self, "left", freeze(as_rational_array(self.left, (n, d, d))))
        object.__setattr__(self, "right", freeze(as_rational_array(self.right, (n, d, d))))

    @property
    def n(self) -> int:
        return self.algebra.dim

    def left_action(self, i: int) -> Matrix:
        return Matrix.from_array(self.left[i])

    def right_action(self, i: int) -> Matrix:
        return Matrix.from_array(self.right[i])

    def left_of(self, x: Sequence[Scalar]) -> np.ndarray:
        """l_x for a coordinate vector x."""
        return _combine(self.left, x, self.dim_v)

    def right_of(self, x: Sequence[Scalar]) -> np.ndarray:
        return _combine(self.right, x, self.dim_v)

    def without_right(self) -> "Representation":
        """The pair (l, 0)."""
        return Representation(self.algebra, self.dim_v, self.left, zeros(self.right.shape), self.name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.dim_v == other.dim_v
            and bool(np.array_equal(self.left, other.left))
            and bool(np.array_equal(self.right, other.right))
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.dim_v, tuple(self.left.flat), tuple(self.right.flat)))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Representation{label} of {self.algebra!r} on dim {self.dim_v}>"


def _combine(stack: np.ndarray, x: Sequence[Scalar], d: int) -> np.ndarray:
    vec = np.array([v for v in x], dtype=object)
    if len(vec) != stack.shape[0]:
        raise DimensionError(f"Expected a vector of length {stack.shape[0]}, got {len(vec)}")
    if stack.shape[0] == 0:
        return zeros((d, d))
    return np.tensordot(as_rational_array(vec), stack, axes=([0], [0]))


@dataclass(frozen=True)
class RepCheck:
    """Verdict of :func:`rep_check`; ``pair`` is a 1-based basis pair (x, y)."""
    ok: bool
    axiom: Optional[str] = None
    pair: Optional[Tuple[int, int]] = None
    defect: Optional[Matrix] = None
    name: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        label = self.name or "representation"
        if self.ok:
            return f"{label}: representation axioms hold"
        i, j = self.pair
        return f"{label}: axiom {self.axiom} ({_AXIOM_TEXT[self.axiom]}) fails at (x, y) = (e{i}, e{j})"


def _axiom_defect(rep: Representation, axiom: str, i: int, j: int) -> np.ndarray:
    left, right = rep.left, rep.right
    if axiom == "right":
        return right[j].dot(left[i]) + right[j].dot(right[i])
    bracket = rep.algebra.constants[i, j]
    li = left[i]
    if axiom == "left":
        lj = left[j]
        return _combine(left, bracket, rep.dim_v) - (li.dot(lj) - lj.dot(li))
    rj = right[j]
    return _combine(right, bracket, rep.dim_v) - (li.dot(rj) - rj.dot(li))


def rep_check(rep: Representation, axioms: Sequence[str] = AXIOMS) -> RepCheck:
    """Check the representation axioms on all basis pairs.

    Axioms are tried in the order given; within an axiom, pairs are scanned
    lexicographically. ``axioms=("left",)`` checks only that l is a left action.
    """
    n = rep.n
    for axiom in axioms:
        if axiom not in AXIOMS:
            raise ValueError(f"Unknown axiom {axiom!r}")
    for axiom in axioms:
        for i in range(n):
            for j in range(n):
                defect = _axiom_defect(rep, axiom, i, j)
                if not is_zero_array(defect):
                    logger.debug(f"{rep!r}: axiom {axiom} fails at ({i + 1}, {j + 1})")
                    return RepCheck(False, axiom, (i + 1, j + 1), Matrix.from_array(defect), rep.name)
    return RepCheck(True, name=rep.name)


def require_rep(rep: Representation, axioms: Sequence[str] = AXIOMS) -> Representation:
    check = rep_check(rep, axioms)
    if not check:
        logger.error(check.describe())
        raise RepresentationValidationError(check)
    return rep


def trivial_rep(alg: LeibnizAlgebra, dim_v: int = 1) -> Representation:
    """(Q^d, 0, 0)."""
    n = alg.dim
    return Representation(alg, dim_v, zeros((n, dim_v, dim_v)), zeros((n, dim_v, dim_v)), "trivial")


def adjoint_rep(alg: LeibnizAlgebra) -> Representation:
    """(g, ad_L, ad_R) with l_i e_j = [e_i, e_j] and r_i e_j = [e_j, e_i]."""
    require_leibniz(alg)
    n = alg.dim
    left = zeros((n, n, n))
    right = zeros((n, n, n))
    for i in range(n):
        left[i] = left_matrix(alg, i)
        right[i] = right_matrix(alg, i)
    return Representation(alg, n, left, right, "adjoint")


def semidirect_product(rep: Representation, use_r: bool = True, validate: bool = True) -> LeibnizAlgebra:
    """g (+) V with [x+u, y+v] = [x,y] + l_x v + r_y u (r dropped when ``use_r`` is false).

    The basis is (e_1..e_n, f_1..f_d). With ``validate`` false the table is
    built for any pair (l, r) and returned unchecked.
    """
    if validate:
        require_rep(rep, AXIOMS if use_r else ("left",))
    n, d = rep.n, rep.dim_v
    size = n + d
    table = zeros((size, size, size))
    table[:n, :n, :n] = rep.algebra.constants
    for i in range(n):
        # [e_i, f_b] = l_i f_b
        table[i, n:, n:] = rep.left[i].T
        if use_r:
            # [f_a, e_i] = r_i f_a
            table[n:, i, n:] = rep.right[i].T
    suffix = "(l,r)" if use_r else "(l,0)"
    product = LeibnizAlgebra(size, table, f"{rep.algebra.name or 'g'}x{suffix}")
    return require_leibniz(product) if validate else product


def rbar_cochain(rep: Representation) -> Cochain:
    """r_bar(x+u, y+v) = r_y u as an h-valued 2-cochain on h = g x_(l,0) V."""
    n, d = rep.n, rep.dim_v
    size = n + d
    table = zeros((size, size, size))
    for j in range(n):
        # r_bar(f_a, e_j) = r_j f_a
        table[n:, j, n:] = rep.right[j].T
    return Cochain(2, size, size, table)


def deformation_check(rep: Representation) -> bool:
    """The (l, r) semidirect bracket equals the (l, 0) bracket plus r_bar, coefficientwise."""
    deformed = semidirect_product(rep, use_r=True).constants
    base = semidirect_product(rep, use_r=False).constants
    return bool(np.array_equal(deformed, base + rbar_cochain(rep).coeffs))


# ---------------------------------------------------------------------------
# V* (x) V
# ---------------------------------------------------------------------------

def _tensor_action_matrix(left_x: np.ndarray, d: int) -> np.ndarray:
    """(l*(x)1 + 1(x)l)_x on the basis E_ab = e_a (x) e_b^*, as a d^2 x d^2 matrix.

    E_ab maps to sum_c l[c, a] E_cb - sum_c l[b, c] E_ac.
    """
    action = zeros((d * d, d * d))
    for a in range(d):
        for b in range(d):
            column = a * d + b
            for c in range(d):
                action[c * d + b, column] += left_x[c, a]
                action[a * d + c, column] -= left_x[b, c]
    return action


def dual_tensor_rep(rep: Representation) -> Representation:
    """The representation (V* (x) V, l*(x)1 + 1(x)l, 0) in the row-major matrix-unit basis."""
    require_rep(rep, ("left",))
    n, d = rep.n, rep.dim_v
    size = d * d
    left = zeros((n, size, size))
    for i in range(n):
        left[i] = _tensor_action_matrix(rep.left[i], d)
    return Representation(rep.algebra, size, left, zeros((n, size, size)), "dual-tensor")


def tensor_action(rep: Representation, i: int, a: Matrix) -> Matrix:
    """Action of e_i (0-based) on A in gl(V) via the tensor formula."""
    d = rep.dim_v
    flat = np.array(a.flatten(), dtype=object)
    image = _tensor_action_matrix(rep.left[i], d).dot(flat) if d else flat
    return Matrix.from_flat(tuple(image), d, d)


def commutator_action(rep: Representation, i: int, a: Matrix) -> Matrix:
    """[l_{e_i}, A]."""
    return rep.left_action(i).commutator(a)


def right_action_cochain(rep: Representation) -> Cochain:
    """x -> r_x as a 1-cochain valued in V* (x) V = gl(V)."""
    n, d = rep.n, rep.dim_v
    return Cochain(1, n, d * d, np.asarray(rep.right, dtype=object).reshape(n, d * d))


# ---------------------------------------------------------------------------
# Invariant subspaces
# ---------------------------------------------------------------------------

def subrepresentation(rep: Representation, vectors: Sequence[Sequence[Scalar]]) -> Tuple[Subspace, Representation]:
    """Restrict (l, r) to span(vectors), in the coordinates of its RREF basis."""
    d = rep.dim_v
    sub = Subspace.span(vectors, d)
    s = sub.dim
    left = zeros((rep.n, s, s))
    right = zeros((rep.n, s, s))
    for stack, target, kind in ((rep.left, left, "left"), (rep.right, right, "right")):
        for i in range(rep.n):
            action = Matrix.from_array(stack[i])
            for t, w in enumerate(sub.basis):
                image = action.apply(w)
                if not sub.contains(image):
                    raise InvariantSubspaceError(
                        f"Subspace is not invariant: {kind} action of e{i + 1} leaves it"
                    )
                target[i, :, t] = sub.coordinates(image)
    return sub, Representation(rep.algebra, s, left, right, f"{rep.name or 'rep'}|sub")


