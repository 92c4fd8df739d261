"""
Omni-cohomology of a Leibniz algebra with coefficients in an omni-representation.

For rho: g -> ol(V) the image img(rho) is a Leibniz subalgebra of ol(V), and

    l_x(b) = [[rho(x), b]],   r_x(b) = [[b, rho(x)]]

make img(rho) a representation of g. Omni-cochains are k-cochains valued in
img(rho), stored in the coordinates of its RREF basis, and delta is the
Loday-Pirashvili coboundary of that representation. :func:`omni_coboundary_value`
evaluates delta directly in ol(V) as an independent path.

The correspondences at the bottom send a V-valued cochain f to
``phi o f + f``; for the adjoint omni-representation phi = ad_L.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .algebra import LeibnizAlgebra
from .cochains import Cochain, CochainError, multi_indices
from .cohomology import CohomologyTable, cohomology_table, coboundary
from .linalg import (
    Matrix,
    NotInSpanError,
    Subspace,
    VerificationError,
    Vector,
    unit_vector,
    zeros,
)
from .logger import logger
from .omni import (
    GraphError,
    OmniElement,
    OmniRep,
    adjoint_omnirep,
    as_phi,
    graph_factorization_failure,
    omni_bracket,
    require_omnirep,
)
from .progress import ProgressCallback
from .representations import Representation


class ImageClosureError(VerificationError):
    """Raised when img(rho) fails to be closed under the omni bracket."""
    pass


@dataclass(frozen=True)
class ImageSubspace:
    """img(rho) inside gl(V) (+) V with its RREF basis."""
    d: int
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def ambient_dim(self) -> int:
        return self.d * self.d + self.d

    def element(self, t: int) -> OmniElement:
        return OmniElement.from_coordinates(self.subspace.basis[t], self.d)

    @property
    def basis(self) -> List[OmniElement]:
        return [self.element(t) for t in range(self.dim)]

    def coordinates(self, x: OmniElement) -> Vector:
        """Coordinates of x in the image basis; raises NotInSpanError outside the image."""
        return self.subspace.coordinates(x.coordinates())

    def contains(self, x: OmniElement) -> bool:
        return self.subspace.contains(x.coordinates())

    def combine(self, coeffs: Sequence) -> OmniElement:
        return OmniElement.from_coordinates(self.subspace.combine(coeffs), self.d)

    def inclusion(self) -> Matrix:
        """(d^2 + d) x dim matrix whose columns are the basis vectors."""
        return Matrix.from_rows(self.subspace.basis, self.ambient_dim).transpose() if self.dim else \
            Matrix.zeros(self.ambient_dim, 0)


def _closure_coordinates(image: ImageSubspace, x: OmniElement, what: str) -> Vector:
    try:
        return image.coordinates(x)
    except NotInSpanError:
        message = f"{what} is not in img(rho); rho is not a homomorphism"
        logger.error(message)
        raise ImageClosureError(message) from None


def image_subspace(rho: OmniRep, validate: bool = True) -> ImageSubspace:
    """Basis of img(rho) from the RREF of rho(e_1), ..., rho(e_n); closure is verified."""
    if validate:
        require_omnirep(rho)
    d = rho.d
    image = ImageSubspace(d, Subspace.span(rho.coordinate_rows(), d * d + d))
    basis = image.basis
    for s, x in enumerate(basis):
        for t, y in enumerate(basis):
            _closure_coordinates(image, omni_bracket(x, y), f"[[b{s + 1}, b{t + 1}]]")
    logger.debug(f"img of {rho!r} has dimension {image.dim}")
    return image


def image_representation(rho: OmniRep, validate: bool = True) -> Tuple[ImageSubspace, Representation]:
    """img(rho) with l_x(b) = [[rho(x), b]] and r_x(b) = [[b, rho(x)]] in image coordinates."""
    image = image_subspace(rho, validate)
    n, p = rho.n, image.dim
    left = zeros((n, p, p))
    right = zeros((n, p, p))
    basis = image.basis
    for i in range(n):
        rho_i = rho.element(i)
        for t, b in enumerate(basis):
            left[i][:, t] = _closure_coordinates(image, omni_bracket(rho_i, b), f"[[rho(e{i + 1}), b{t + 1}]]")
            right[i][:, t] = _closure_coordinates(image, omni_bracket(b, rho_i), f"[[b{t + 1}, rho(e{i + 1})]]")
    return image, Representation(rho.algebra, p, left, right, f"img({rho.name or 'rho'})")


@dataclass(frozen=True, eq=False)
class OmniCochain:
    """A k-cochain valued in img(rho), in image-basis coordinates."""
    image: ImageSubspace
    cochain: Cochain

    def __post_init__(self):
        if self.cochain.codomain_dim != self.image.dim:
            raise CochainError(
                f"Omni-cochain values have {self.cochain.codomain_dim} coordinates, image has dimension {self.image.dim}"
            )

    @property
    def degree(self) -> int:
        return self.cochain.degree

    @classmethod
    def zero(cls, image: ImageSubspace, degree: int, arity_dim: int) -> "OmniCochain":
        return cls(image, Cochain.zero(degree, arity_dim, image.dim))

    @classmethod
    def from_ambient(cls, image: ImageSubspace, ambient: Cochain) -> "OmniCochain":
        """Re-express a (d^2 + d)-valued cochain in image coordinates."""
        if ambient.codomain_dim != image.ambient_dim:
            raise CochainError(f"Expected values in gl(V) (+) V of dimension {image.ambient_dim}")

        def coords(indices):
            try:
                return image.subspace.coordinates(ambient.value(indices))
            except NotInSpanError:
                raise CochainError(f"Value at {tuple(i + 1 for i in indices)} is not in img(rho)") from None

        return cls(image, Cochain.from_function(ambient.degree, ambient.arity_dim, image.dim, coords))

    def ambient(self) -> Cochain:
        return self.cochain.map_codomain(self.image.inclusion())

    def value_element(self, indices: Sequence[int]) -> OmniElement:
        return self.image.combine(self.cochain.value(indices))

    def evaluate_element(self, *args) -> OmniElement:
        return self.image.combine(self.cochain.evaluate(*args))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OmniCochain):
            return NotImplemented
        return self.image == other.image and self.cochain == other.cochain

    def __hash__(self) -> int:
        return hash((self.image, self.cochain))


def omni_coboundary(rho: OmniRep, f: OmniCochain) -> OmniCochain:
    """delta f, via the representation on img(rho)."""
    image, rep = image_representation(rho)
    if image != f.image:
        raise CochainError("Omni-cochain is not valued in img(rho)")
    return OmniCochain(image, coboundary(rep, f.cochain))


def omni_coboundary_value(rho: OmniRep, f: OmniCochain, indices: Sequence[int]) -> OmniElement:
    """(delta f)(e_{i_1}, ..., e_{i_{k+1}}) computed with the omni bracket in ol(V)."""
    k = f.degree
    n = rho.n
    if len(indices) != k + 1:
        raise CochainError(f"delta of a degree-{k} cochain takes {k + 1} arguments")
    args = [unit_vector(n, i) for i in indices]
    total = OmniElement.zero(rho.d)

    for i in range(k):
        rest = args[:i] + args[i + 1:]
        term = omni_bracket(rho.image_of(args[i]), f.evaluate_element(*rest))
        total = total + (term if i % 2 == 0 else term.scale(-1))

    term = omni_bracket(f.evaluate_element(*args[:k]), rho.image_of(args[k]))
    total = total + (term if (k + 1) % 2 == 0 else term.scale(-1))

    for i in range(1, k + 2):
        for j in range(i + 1, k + 2):
            bracket = rho.algebra.bracket(args[i - 1], args[j - 1])
            slots = args[:j - 1] + [bracket] + args[j:]
            del slots[i - 1]
            term = f.evaluate_element(*slots)
            total = total + (term if i % 2 == 0 else term.scale(-1))
    return total


def omni_cohomology_table(
    rho: OmniRep,
    max_degree: Optional[int] = None,
    workers: Optional[int] = None,
    progress_callback: Optional[ProgressCallback] = None,
    validate: bool = True,
) -> CohomologyTable:
    _, rep = image_representation(rho, validate)
    return cohomology_table(rep, max_degree, workers, progress_callback, validate)


def omni_cohomology_dims(rho: OmniRep, max_degree: Optional[int] = None, **kwargs) -> List[int]:
    """[dim H_omni^0, ..., dim H_omni^K]."""
    return list(omni_cohomology_table(rho, max_degree, **kwargs).dims)


# ---------------------------------------------------------------------------
# Correspondences f <-> phi o f + f
# ---------------------------------------------------------------------------

def _graph_map(phi: np.ndarray) -> Matrix:
    """v -> phi(v) + v as a (d^2 + d) x d matrix."""
    d = phi.shape[0]
    columns = [tuple(phi[b].flat) + unit_vector(d, b) for b in range(d)]
    if not columns:
        return Matrix.zeros(0, 0)
    return Matrix.from_rows(columns, d * d + d).transpose()


def _projection(d: int) -> Matrix:
    """A + u -> u."""
    rows = [(0,) * (d * d) + unit_vector(d, a) for a in range(d)]
    return Matrix.from_rows(rows, d * d + d) if rows else Matrix.zeros(0, 0)


def _correspond(image: ImageSubspace, phi: np.ndarray, c: Union[Cochain, OmniCochain]):
    d = phi.shape[0]
    if isinstance(c, OmniCochain):
        if c.image != image:
            raise CochainError("Omni-cochain is not valued in the expected image")
        return c.ambient().map_codomain(_projection(d))
    if c.codomain_dim != d:
        raise CochainError(f"Expected a cochain valued in a space of dimension {d}, got {c.codomain_dim}")
    return OmniCochain.from_ambient(image, c.map_codomain(_graph_map(phi)))


def adjoint_correspondence(alg: LeibnizAlgebra, c: Union[Cochain, OmniCochain]) -> Union[Cochain, OmniCochain]:
    """f <-> (ad_L o f, f) between g-valued and img(ad)-valued cochains.

    A :class:`Cochain` maps to an :class:`OmniCochain` and vice versa.
    """
    rho = adjoint_omnirep(alg)
    return _correspond(image_subspace(rho), rho.phi, c)


def graph_correspondence(rho: OmniRep, phi, c: Union[Cochain, OmniCochain]) -> Union[Cochain, OmniCochain]:
    """f <-> phi o f + f for rho with image in the graph of phi.

    V-valued cochains must take values in img(theta).
    """
    failure = graph_factorization_failure(rho, phi)
    if failure is not None:
        raise GraphError(f"rho(e{failure}) is not in the graph of phi")
    return _correspond(image_subspace(rho), as_phi(phi), c)


def ambient_coboundary_values(rho: OmniRep, f: OmniCochain) -> List[OmniElement]:
    """All values of delta f on basis multi-indices, computed in ol(V), in row-major order."""
    return [omni_coboundary_value(rho, f, indices) for indices in multi_indices(rho.n, f.degree + 1)]
