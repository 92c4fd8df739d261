"""omnileib: exact computations with Leibniz algebras and omni-representations.

The package-level API re-exports the objects most scripts need; everything
else lives in the submodules.

Example:
    >>> from omnileib import get_algebra, compare_adjoint
    >>> compare_adjoint(get_algebra("L2"), 2).equal
    True
"""

from __future__ import annotations

from ._meta import __version__
from .algebra import LeibnizAlgebra, is_leibniz
from .catalog import catalog, get_algebra
from .cohomology import cohomology_dims
from .linalg import InputError, VerificationError
from .omni import OmniRep, adjoint_omnirep, omnirep_check
from .omni_cohomology import omni_cohomology_dims
from .representations import Representation, adjoint_rep, rep_check, trivial_rep
from .verify import compare_adjoint, compare_graph, compare_trivial

__all__ = [
    "__version__",
    "InputError",
    "VerificationError",
    "LeibnizAlgebra",
    "is_leibniz",
    "catalog",
    "get_algebra",
    "Representation",
    "rep_check",
    "trivial_rep",
    "adjoint_rep",
    "cohomology_dims",
    "OmniRep",
    "omnirep_check",
    "adjoint_omnirep",
    "omni_cohomology_dims",
    "compare_trivial",
    "compare_adjoint",
    "compare_graph",
]
