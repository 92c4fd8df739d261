"""
Shuffles, insertion products and the graded bracket on C*(g, g).

For P in C^{p+1}(g, g) and Q in C^{q+1}(g, g)::

    (P o_k Q)(x_1, ..., x_{p+q+1})
        = sum_{s in Sh(k-1, q)} sgn(s) (-1)^{(k-1)q}
          P(x_s(1), ..., x_s(k-1), Q(x_s(k), ..., x_s(k+q-1), x_{k+q}), x_{k+q+1}, ..., x_{p+q+1})

    P o Q   = sum_{k=1}^{p+1} P o_k Q
    [P, Q]  = P o Q - (-1)^{pq} Q o P

A bilinear map alpha is a Leibniz bracket exactly when [alpha, alpha] = 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

import numpy as np

from .algebra import LeibnizAlgebra
from .cochains import Cochain, CochainError, bracket_cochain
from .cohomology import coboundary
from .linalg import InputError, Vector, format_rational, to_rational, unit_vector, zeros
from .logger import logger
from .representations import (
    AXIOMS,
    Representation,
    adjoint_rep,
    rbar_cochain,
    require_rep,
    semidirect_product,
)


class BalavoineError(InputError):
    """Raised for cochains outside C*(g, g) or an out-of-range insertion slot."""
    pass


@dataclass(frozen=True)
class Shuffle:
    """A permutation given by its images (1-based) and its sign."""
    images: Tuple[int, ...]
    sign: int

    def inverse(self) -> Tuple[int, ...]:
        """0-based inverse permutation."""
        inv = [0] * len(self.images)
        for position, image in enumerate(self.images):
            inv[image - 1] = position
        return tuple(inv)


def _sign(perm: Tuple[int, ...]) -> int:
    inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def shuffles(i: int, j: int) -> List[Shuffle]:
    """All (i, j)-shuffles of {1..i+j} in lexicographic order."""
    if i < 0 or j < 0:
        raise BalavoineError(f"Shuffle block sizes must be non-negative, got ({i}, {j})")
    n = i + j
    result = []
    for head in itertools.combinations(range(1, n + 1), i):
        tail = tuple(v for v in range(1, n + 1) if v not in head)
        images = head + tail
        result.append(Shuffle(images, _sign(images)))
    assert len(result) == comb(n, i)
    return result


def _require_g_valued(c: Cochain, what: str) -> None:
    if c.degree < 1:
        raise BalavoineError(f"{what} has degree 0; C*(g, g) starts in degree 1")
    if c.arity_dim != c.codomain_dim:
        raise BalavoineError(f"{what} is not g-valued ({c.arity_dim} -> {c.codomain_dim})")


def circ_k(P: Cochain, Q: Cochain, k: int) -> Cochain:
    """The insertion product P o_k Q (1 <= k <= p+1)."""
    _require_g_valued(P, "P")
    _require_g_valued(Q, "Q")
    if P.arity_dim != Q.arity_dim:
        raise CochainError("P and Q live on algebras of different dimensions")
    p, q = P.degree - 1, Q.degree - 1
    if not 1 <= k <= p + 1:
        raise BalavoineError(f"Insertion slot k={k} out of range 1..{p + 1}")
    n = P.arity_dim
    degree = p + q + 1
    if n == 0:
        return Cochain.zero(degree, 0, 0)

    # G(x_1..x_{p+q+1}) = P(x_1..x_{k-1}, Q(x_k..x_{k+q}), x_{k+q+1}..)
    t = np.tensordot(P.coeffs, Q.coeffs, axes=([k - 1], [q + 1]))
    labels = (
        list(range(k - 1))
        + [s + q for s in range(k, p + 1)]
        + [degree]
        + [k - 1 + u for u in range(q + 1)]
    )
    base = np.transpose(t, [labels.index(s) for s in range(degree + 1)])

    sign_k = -1 if ((k - 1) * q) % 2 else 1
    moved = k - 1 + q
    rest = list(range(moved, degree + 1))
    out = zeros(base.shape)
    for shuffle in shuffles(k - 1, q):
        term = np.transpose(base, list(shuffle.inverse()) + rest)
        out = out + term if shuffle.sign * sign_k > 0 else out - term
    return Cochain(degree, n, n, out)


def circ_bar(P: Cochain, Q: Cochain) -> Cochain:
    """P o Q = sum over all insertion slots."""
    result = None
    for k in range(1, P.degree + 1):
        term = circ_k(P, Q, k)
        result = term if result is None else result + term
    return result


def bracket_B(P: Cochain, Q: Cochain) -> Cochain:
    """[P, Q] = P o Q - (-1)^{pq} Q o P."""
    p, q = P.degree - 1, Q.degree - 1
    forward = circ_bar(P, Q)
    backward = circ_bar(Q, P)
    return forward - backward if (p * q) % 2 == 0 else forward + backward


def graded_skew_defect(P: Cochain, Q: Cochain) -> Cochain:
    """[P, Q] + (-1)^{pq} [Q, P]; zero for every pair."""
    p, q = P.degree - 1, Q.degree - 1
    other = bracket_B(Q, P)
    return bracket_B(P, Q) + (other if (p * q) % 2 == 0 else -other)


def graded_jacobi_defect(P: Cochain, Q: Cochain, R: Cochain) -> Cochain:
    """(-1)^{pr}[[P,Q],R] + (-1)^{qp}[[Q,R],P] + (-1)^{rq}[[R,P],Q]."""
    p, q, r = P.degree - 1, Q.degree - 1, R.degree - 1

    def signed(exponent: int, c: Cochain) -> Cochain:
        return -c if exponent % 2 else c

    return (
        signed(p * r, bracket_B(bracket_B(P, Q), R))
        + signed(q * p, bracket_B(bracket_B(Q, R), P))
        + signed(r * q, bracket_B(bracket_B(R, P), Q))
    )


def leibniz_identity_cochain(alpha: Cochain) -> Cochain:
    """2(alpha(alpha(x,y),z) - alpha(x,alpha(y,z)) + alpha(y,alpha(x,z))), evaluated directly."""
    _require_g_valued(alpha, "alpha")
    if alpha.degree != 2:
        raise BalavoineError(f"Expected a 2-cochain, got degree {alpha.degree}")
    n = alpha.arity_dim

    def value(indices: Tuple[int, int, int]) -> Vector:
        x, y, z = (unit_vector(n, i) for i in indices)
        first = alpha.evaluate(alpha.evaluate(x, y), z)
        second = alpha.evaluate(x, alpha.evaluate(y, z))
        third = alpha.evaluate(y, alpha.evaluate(x, z))
        return tuple(2 * (a - b + c) for a, b, c in zip(first, second, third))

    return Cochain.from_function(3, n, n, value)


# ---------------------------------------------------------------------------
# Maurer-Cartan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MaurerCartanCheck:
    """Verdict of :func:`mc_check`; the witness is a 1-based triple in the semidirect basis."""
    ok: bool
    witness: Optional[Tuple[int, int, int]] = None
    defect: Optional[Vector] = None
    name: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        label = self.name or "representation"
        if self.ok:
            return f"{label}: d(rbar) - 1/2 [rbar, rbar] = 0"
        i, j, k = self.witness
        defect = ", ".join(format_rational(v) for v in self.defect)
        return f"{label}: Maurer-Cartan equation fails at (e{i}, e{j}, e{k}); defect ({defect})"


def maurer_cartan_defect(rep: Representation) -> Cochain:
    """d(rbar) - 1/2 [rbar, rbar] on h = g x_(l,0) V with the adjoint coefficients of h."""
    h = semidirect_product(rep, use_r=False)
    rbar = rbar_cochain(rep)
    return coboundary(adjoint_rep(h), rbar) - bracket_B(rbar, rbar).scale(to_rational("1/2"))


def mc_check(rep: Representation, validate: bool = True) -> MaurerCartanCheck:
    """Evaluate the Maurer-Cartan equation for rbar coefficientwise.

    With ``validate=False`` only l needs to be a left action, so a pair (l, r)
    with a broken right action yields a failing verdict instead of an error.
    """
    require_rep(rep, AXIOMS if validate else ("left",))
    defect = maurer_cartan_defect(rep)
    for index in np.ndindex(*defect.shape[:-1]):
        vec = defect.value(index)
        if any(v != 0 for v in vec):
            witness = tuple(i + 1 for i in index)
            logger.debug(f"Maurer-Cartan equation fails for {rep!r} at {witness}")
            return MaurerCartanCheck(False, witness, vec, rep.name)
    return MaurerCartanCheck(True, name=rep.name)


def bracket_square(alg: LeibnizAlgebra) -> Cochain:
    """[alpha, alpha] for the bracket alpha of ``alg``."""
    alpha = bracket_cochain(alg)
    return bracket_B(alpha, alpha)
