"""
Loday-Pirashvili cohomology of a Leibniz algebra with coefficients in (V, l, r).

For a k-cochain c the coboundary is

    (dc)(x_1, ..., x_{k+1})
        = sum_{i=1}^{k} (-1)^{i+1} l_{x_i} c(x_1, ..., ^x_i, ..., x_{k+1})
        + (-1)^{k+1} r_{x_{k+1}} c(x_1, ..., x_k)
        + sum_{1<=i<j<=k+1} (-1)^i c(x_1, ..., ^x_i, ..., x_{j-1}, [x_i, x_j], x_{j+1}, ..., x_{k+1})

applied literally at k = 0, where it reads dc(x) = -r_x c.

There are two implementations: :func:`coboundary` acts on a
single dense cochain with numpy contractions, and :func:`coboundary_matrix`
assembles the sparse matrix of d_k entry by entry for rank computations.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from .cochains import Cochain, CochainError, cochain_shape, multi_indices
from .config import Config
from .linalg import InputError, SparseMatrix, VerificationError, ZERO, zeros
from .logger import logger
from .progress import ProgressCallback, ProgressType, emit
from .representations import Representation, require_rep


class CohomologySizeError(InputError):
    """Raised when a requested cochain space exceeds the configured limits."""
    pass


def _check_operands(rep: Representation, c: Cochain) -> None:
    if c.arity_dim != rep.n or c.codomain_dim != rep.dim_v:
        raise CochainError(
            f"Cochain on ({c.arity_dim} -> {c.codomain_dim}) does not match "
            f"representation of dim {rep.n} on dim {rep.dim_v}"
        )


def coboundary(rep: Representation, c: Cochain) -> Cochain:
    """d c as a dense (k+1)-cochain."""
    _check_operands(rep, c)
    k, n, m = c.degree, rep.n, rep.dim_v
    out = zeros(cochain_shape(k + 1, n, m))
    if n == 0 or m == 0:
        return Cochain(k + 1, n, m, out)
    table = c.coeffs

    # left actions on slot p
    t = np.tensordot(rep.left, table, axes=([2], [k]))
    for p in range(k):
        perm = [2 + q for q in range(p)] + [0] + [2 + q for q in range(p, k)] + [1]
        term = np.transpose(t, perm)
        out = out + term if p % 2 == 0 else out - term

    # right action of the last argument
    t = np.tensordot(rep.right, table, axes=([2], [k]))
    term = np.transpose(t, list(range(2, k + 2)) + [0, 1])
    out = out + term if (k + 1) % 2 == 0 else out - term

    # brackets [x_i, x_j] replacing x_j
    constants = rep.algebra.constants
    for i in range(1, k + 2):
        for j in range(i + 1, k + 2):
            t = np.tensordot(constants, table, axes=([2], [j - 2]))
            labels = [i - 1, j - 1] + [s for s in range(j - 1) if s != i - 1] + list(range(j, k + 1)) + [k + 1]
            perm = [labels.index(s) for s in range(k + 2)]
            term = np.transpose(t, perm)
            out = out + term if i % 2 == 0 else out - term

    return Cochain(k + 1, n, m, out)


def is_cocycle(rep: Representation, c: Cochain) -> bool:
    return coboundary(rep, c).is_zero()


def cochain_dimension(rep: Representation, degree: int) -> int:
    return rep.n ** degree * rep.dim_v


def _nonzero_entries(stack: np.ndarray) -> Dict[int, List[Tuple[int, int, Fraction]]]:
    """For stack[x][a][b], group nonzero (x, a, value) by the column index b."""
    grouped: Dict[int, List[Tuple[int, int, Fraction]]] = {}
    for x, a, b in zip(*np.nonzero(stack != 0)):
        grouped.setdefault(int(b), []).append((int(x), int(a), stack[x, a, b]))
    return grouped


def coboundary_matrix(rep: Representation, degree: int) -> SparseMatrix:
    """Matrix of d_k: C^k -> C^{k+1} in the row-major multi-index bases."""
    k, n, m = degree, rep.n, rep.dim_v
    rows, cols = n ** (k + 1) * m, n ** k * m
    acc: Dict[Tuple[int, int], Fraction] = {}
    if rows == 0 or cols == 0:
        return SparseMatrix(rows, cols)

    row_shape = cochain_shape(k + 1, n, m)
    col_shape = cochain_shape(k, n, m)
    left_nz = _nonzero_entries(rep.left)
    right_nz = _nonzero_entries(rep.right)
    constants = rep.algebra.constants
    bracket_nz: Dict[int, List[Tuple[int, int, Fraction]]] = {}
    for xi, xj, s in zip(*np.nonzero(constants != 0)):
        bracket_nz.setdefault(int(s), []).append((int(xi), int(xj), constants[xi, xj, s]))

    def add(row_index: Tuple[int, ...], col: int, value: Fraction) -> None:
        key = (int(np.ravel_multi_index(row_index, row_shape)), col)
        acc[key] = acc.get(key, ZERO) + value

    right_sign = 1 if (k + 1) % 2 == 0 else -1
    for J in multi_indices(n, k):
        for b in range(m):
            col = int(np.ravel_multi_index(J + (b,), col_shape))
            for p in range(k):
                sign = 1 if p % 2 == 0 else -1
                for x, a, value in left_nz.get(b, ()):
                    add(J[:p] + (x,) + J[p:] + (a,), col, sign * value)
            for x, a, value in right_nz.get(b, ()):
                add(J + (x, a), col, right_sign * value)
            for i in range(1, k + 2):
                sign = 1 if i % 2 == 0 else -1
                for j in range(i + 1, k + 2):
                    s = J[j - 2]
                    base = J[:j - 2]
                    for xi, xj, value in bracket_nz.get(s, ()):
                        y = base[:i - 1] + (xi,) + base[i - 1:] + (xj,) + J[j - 1:]
                        add(y + (b,), col, sign * value)

    matrix = SparseMatrix.from_accumulator(rows, cols, acc)
    logger.debug(f"d_{k} for {rep!r}: {rows}x{cols}, {matrix.nnz} nonzeros")
    return matrix


def check_size(rep: Representation, max_degree: int) -> None:
    """Guard against cochain spaces beyond the degree cap or coefficient limit."""
    if max_degree < 0:
        raise CohomologySizeError(f"max_degree must be non-negative, got {max_degree}")
    if max_degree > Config.DEGREE_CAP:
        raise CohomologySizeError(f"max_degree {max_degree} exceeds the cap of {Config.DEGREE_CAP}")
    needed = cochain_dimension(rep, max_degree + 1)
    if needed > Config.MAX_COEFFICIENTS:
        raise CohomologySizeError(
            f"C^{max_degree + 1} has {needed} coefficients, above the limit of {Config.MAX_COEFFICIENTS}"
        )


@dataclass(frozen=True)
class CohomologyTable:
    """Dimensions of C^k, ranks of d_k and dimensions of H^k for k = 0..max_degree."""
    max_degree: int
    cochain_dims: Tuple[int, ...]
    ranks: Tuple[int, ...]
    dims: Tuple[int, ...]

    def kernel_dim(self, degree: int) -> int:
        return self.cochain_dims[degree] - self.ranks[degree]

    def to_dict(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "cochain_dims": list(self.cochain_dims),
            "ranks": list(self.ranks),
            "dims": list(self.dims),
        }


def table_from_ranks(cochain_dims: List[int], ranks: List[int]) -> CohomologyTable:
    """dim H^k = dim C^k - rank d_k - rank d_{k-1}, with rank d_{-1} = 0."""
    dims = []
    for degree, size in enumerate(cochain_dims):
        previous = ranks[degree - 1] if degree > 0 else 0
        kernel = size - ranks[degree]
        if previous > kernel:
            raise VerificationError(f"rank d_{degree - 1} = {previous} exceeds dim ker d_{degree} = {kernel}")
        dims.append(kernel - previous)
    return CohomologyTable(len(cochain_dims) - 1, tuple(cochain_dims), tuple(ranks), tuple(dims))


def cohomology_table(
    rep: Representation,
    max_degree: Optional[int] = None,
    workers: Optional[int] = None,
    progress_callback: Optional[ProgressCallback] = None,
    validate: bool = True,
) -> CohomologyTable:
    """Ranks of d_0..d_K and the resulting cohomology dimensions.

    With ``workers > 1`` the per-degree ranks run in a thread pool; results are
    collected in degree order, so the table is identical to a sequential run.
    """
    if max_degree is None:
        max_degree = Config.get_default_max_degree()
    if workers is None:
        workers = Config.get_default_workers()
    if validate:
        require_rep(rep)
    check_size(rep, max_degree)

    degrees = list(range(max_degree + 1))
    total = len(degrees)
    emit(progress_callback, ProgressType.COHOMOLOGY_START,
         f"Cohomology of {rep!r} up to degree {max_degree}", total_steps=total)

    def rank_of(degree: int) -> int:
        emit(progress_callback, ProgressType.DEGREE_START, f"Degree {degree}",
             current_step=degree + 1, total_steps=total, step_name=f"d_{degree}")
        value = coboundary_matrix(rep, degree).rank()
        emit(progress_callback, ProgressType.DEGREE_COMPLETE, f"rank d_{degree} = {value}",
             current_step=degree + 1, total_steps=total, step_name=f"d_{degree}",
             metadata={"degree": degree, "rank": value})
        return value

    if workers > 1 and total > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            ranks = list(pool.map(rank_of, degrees))
    else:
        ranks = [rank_of(degree) for degree in degrees]

    table = table_from_ranks([cochain_dimension(rep, degree) for degree in degrees], ranks)
    logger.info(f"H^0..H^{max_degree} of {rep!r}: {list(table.dims)}")
    emit(progress_callback, ProgressType.COHOMOLOGY_COMPLETE, f"dims {list(table.dims)}",
         current_step=total, total_steps=total, metadata=table.to_dict())
    return table


def cohomology_dims(rep: Representation, max_degree: Optional[int] = None, **kwargs) -> List[int]:
    """[dim H^0, ..., dim H^K]."""
    return list(cohomology_table(rep, max_degree, **kwargs).dims)
