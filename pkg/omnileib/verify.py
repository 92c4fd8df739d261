"""
Comparisons of Loday-Pirashvili and omni-cohomology, and seeded randomized suites.

Each ``compare_*`` function computes both dimension sequences and records
which degrees were compared. The suites draw every random object from a
``random.Random(seed)`` so reruns with the same seed are identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np

from .algebra import LeibnizAlgebra, is_leibniz, left_matrix
from .balavoine import (
    bracket_square,
    graded_jacobi_defect,
    graded_skew_defect,
    leibniz_identity_cochain,
)
from .catalog import catalog
from .cochains import Cochain, bracket_cochain
from .cohomology import coboundary, cohomology_dims
from .config import Config
from .linalg import Matrix, zeros
from .logger import logger
from .omni import (
    OmniRep,
    adjoint_omnirep,
    graph_check,
    graph_closure_check,
    induced_bracket,
    induced_lr,
    omnirep_check,
    phi_of,
    trivial_omnireps,
)
from .omni_cohomology import adjoint_correspondence, omni_coboundary, omni_cohomology_dims
from .progress import ProgressCallback, ProgressType, emit
from .representations import adjoint_rep, subrepresentation, trivial_rep

MODE_TRIVIAL = "trivial"
MODE_ADJOINT = "adjoint"
MODE_GRAPH = "graph"


@dataclass
class Comparison:
    """LP versus omni-cohomology dimensions for one theorem instance."""
    mode: str
    algebra: str
    max_degree: int
    lp_dims: List[int]
    omni_dims: List[int]
    compared_degrees: List[int]
    equal: bool
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode,
            "algebra": self.algebra,
            "max_degree": self.max_degree,
            "lp_dims": list(self.lp_dims),
            "omni_dims": list(self.omni_dims),
            "compared_degrees": list(self.compared_degrees),
            "equal": self.equal,
            "notes": list(self.notes),
        }

    def describe(self) -> str:
        lines = [f"compare {self.mode} on {self.algebra} (degrees 0..{self.max_degree})", "  k    LP  omni"]
        for k in range(self.max_degree + 1):
            marker = "" if k in self.compared_degrees else "  (excluded)"
            lines.append(f"  {k:<3}{self.lp_dims[k]:>4}{self.omni_dims[k]:>6}{marker}")
        lines.extend(f"  note: {note}" for note in self.notes)
        lines.append(f"verdict: {'equal' if self.equal else 'DIFFERENT'}")
        return "\n".join(lines)


def _finish(comparison: Comparison) -> Comparison:
    level = "INFO" if comparison.equal else "ERROR"
    logger.log(level, f"compare {comparison.mode} on {comparison.algebra}: LP {comparison.lp_dims} "
                      f"omni {comparison.omni_dims} over degrees {comparison.compared_degrees}")
    return comparison


def _equal_on(lp: List[int], omni: List[int], degrees: List[int]) -> bool:
    return all(lp[k] == omni[k] for k in degrees)


def compare_trivial(alg: LeibnizAlgebra, max_degree: Optional[int] = None, **kwargs) -> Comparison:
    """H(g) with trivial coefficients against H_omni(g) for every trivial omni-representation.

    When [g, g] = g the only trivial omni-representation is rho = 0, whose
    omni-cohomology vanishes; degree 0 is then excluded.
    """
    if max_degree is None:
        max_degree = Config.get_default_max_degree()
    lp = cohomology_dims(trivial_rep(alg), max_degree, **kwargs)
    reps = trivial_omnireps(alg)
    notes: List[str] = []
    if reps:
        degrees = list(range(max_degree + 1))
        omni = omni_cohomology_dims(reps[0], max_degree, **kwargs)
        equal = _equal_on(lp, omni, degrees)
        for index, rho in enumerate(reps[1:], start=2):
            other = omni_cohomology_dims(rho, max_degree, **kwargs)
            if other != omni:
                equal = False
                notes.append(f"trivial omni-representation {index} gives {other}")
        if len(reps) > 1:
            notes.append(f"{len(reps)} trivial omni-representations compared")
    else:
        zero = OmniRep(alg, 1, zeros((alg.dim, 1, 1)), zeros((alg.dim, 1)), "zero")
        omni = omni_cohomology_dims(zero, max_degree, **kwargs)
        degrees = list(range(1, max_degree + 1))
        equal = _equal_on(lp, omni, degrees)
        notes.append("[g,g] = g: rho = 0 is the only trivial omni-representation; degree 0 excluded")
    return _finish(Comparison(MODE_TRIVIAL, alg.name or "g", max_degree, lp, omni, degrees, equal, notes))


def compare_adjoint(alg: LeibnizAlgebra, max_degree: Optional[int] = None, **kwargs) -> Comparison:
    """H(g; ad_L, ad_R) against H_omni(g; ad)."""
    if max_degree is None:
        max_degree = Config.get_default_max_degree()
    lp = cohomology_dims(adjoint_rep(alg), max_degree, **kwargs)
    omni = omni_cohomology_dims(adjoint_omnirep(alg), max_degree, **kwargs)
    degrees = list(range(max_degree + 1))
    return _finish(Comparison(MODE_ADJOINT, alg.name or "g", max_degree, lp, omni, degrees,
                              _equal_on(lp, omni, degrees)))


def compare_graph(rho: OmniRep, phi, max_degree: Optional[int] = None, **kwargs) -> Comparison:
    """H_omni(g; rho) against H(g; l, r) restricted to img(theta), for rho with image in the graph of phi."""
    if max_degree is None:
        max_degree = Config.get_default_max_degree()
    rep = induced_lr(rho, phi)
    sub, restricted = subrepresentation(rep, [tuple(row) for row in rho.theta])
    lp = cohomology_dims(restricted, max_degree, **kwargs)
    omni = omni_cohomology_dims(rho, max_degree, **kwargs)
    degrees = list(range(max_degree + 1))
    notes = []
    if sub.dim < rho.d:
        notes.append(f"(l, r) restricted to img(theta) of dimension {sub.dim} < {rho.d}")
    return _finish(Comparison(MODE_GRAPH, rho.algebra.name or "g", max_degree, lp, omni, degrees,
                              _equal_on(lp, omni, degrees), notes))


# ---------------------------------------------------------------------------
# Random objects
# ---------------------------------------------------------------------------

def random_rational(rng: random.Random, bound: int = 2) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.choice((1, 1, 2)))


def _random_entry(rng: random.Random, density: float, bound: int) -> Fraction:
    return random_rational(rng, bound) if rng.random() < density else Fraction(0)


def random_matrix(rng: random.Random, rows: int, cols: int, density: float = 0.5, bound: int = 2) -> Matrix:
    return Matrix(rows, cols, tuple(_random_entry(rng, density, bound) for _ in range(rows * cols)))


def random_table(rng: random.Random, n: int, density: float = 0.3, bound: int = 2) -> LeibnizAlgebra:
    """Random structure constants; usually not a Leibniz algebra."""
    table = zeros((n, n, n))
    for index in np.ndindex(n, n, n):
        table[index] = _random_entry(rng, density, bound)
    return LeibnizAlgebra(n, table, "random")


def random_cochain(rng: random.Random, degree: int, n: int, m: int,
                   density: float = 0.5, bound: int = 2) -> Cochain:
    size = n ** degree * m
    return Cochain.from_flat(degree, n, m, [_random_entry(rng, density, bound) for _ in range(size)])


def _unit_lower_triangular(rng: random.Random, d: int) -> Matrix:
    entries = [[1 if a == b else (rng.randint(-1, 1) if a > b else 0) for b in range(d)] for a in range(d)]
    return Matrix.from_rows(entries, d)


def _unipotent_inverse(s: Matrix) -> Matrix:
    """(I + N)^-1 = I - N + N^2 - ... for nilpotent N."""
    d = s.rows
    nilpotent = s - Matrix.identity(d)
    result = Matrix.identity(d)
    power = Matrix.identity(d)
    for k in range(1, d):
        power = power @ nilpotent
        result = result + (power if k % 2 == 0 else -power)
    return result


def _transport(phi: np.ndarray, s: Matrix) -> np.ndarray:
    """phi'(u) = S phi(S^-1 u) S^-1; embedding tensors go to embedding tensors."""
    d = s.rows
    s_inv = _unipotent_inverse(s)
    out = zeros((d, d, d))
    for w in range(d):
        inner = Matrix.from_array(phi_of(phi, tuple(s_inv.array[:, w])))
        out[w] = (s @ inner @ s_inv).array
    return out


def _embedding_pool(d: int) -> List[np.ndarray]:
    """ad_L of each catalog algebra of dimension d."""
    pool = []
    for alg in catalog().values():
        if alg.dim == d:
            stack = zeros((d, d, d))
            for i in range(d):
                stack[i] = left_matrix(alg, i)
            pool.append(stack)
    return pool


def random_phi(rng: random.Random, d: int, pool: Optional[List[np.ndarray]] = None) -> np.ndarray:
    """A map V -> gl(V); about half the draws are embedding tensors by construction.

    Constructed draws take ad_L of a catalog algebra of dimension d, scale it
    and conjugate it by a random unipotent matrix. The rest are sparse random.
    """
    if pool is None:
        pool = _embedding_pool(d)
    draw = rng.random()
    if pool and draw < 0.45:
        base = rng.choice(pool)
        scale = rng.choice((1, 2, -1, Fraction(1, 2)))
        return _transport(base * scale, _unit_lower_triangular(rng, d))
    if draw < 0.55:
        return zeros((d, d, d))
    out = zeros((d, d, d))
    for index in np.ndindex(d, d, d):
        out[index] = _random_entry(rng, 0.3, 1)
    return out


@dataclass(frozen=True)
class GraphPair:
    """An omni-representation whose image lies in the graph of ``phi``."""
    rho: OmniRep
    phi: np.ndarray


def adjoint_graph_pair(alg: LeibnizAlgebra) -> GraphPair:
    """ad = ad_L + id lies in the graph of phi = ad_L."""
    rho = adjoint_omnirep(alg)
    return GraphPair(rho, np.array(rho.phi, dtype=object))


def find_graph_pairs(alg: LeibnizAlgebra, d: int, seed: int = 0, attempts: int = 200,
                     limit: int = 5) -> List[GraphPair]:
    """Search for (phi, theta) with phi an embedding tensor and rho = phi o theta + theta a homomorphism.

    theta has entries in {-1, 0, 1} and is never zero.
    """
    rng = random.Random(seed)
    pool = _embedding_pool(d)
    found: List[GraphPair] = []
    seen = set()
    n = alg.dim
    for _ in range(attempts):
        phi = random_phi(rng, d, pool)
        if not graph_check(phi):
            continue
        theta = zeros((n, d))
        for index in np.ndindex(n, d):
            theta[index] = Fraction(rng.randint(-1, 1))
        if all(v == 0 for v in theta.flat):
            continue
        rho_phi = zeros((n, d, d))
        for i in range(n):
            rho_phi[i] = phi_of(phi, tuple(theta[i]))
        rho = OmniRep(alg, d, rho_phi, theta, "graph")
        if rho in seen or not omnirep_check(rho):
            continue
        seen.add(rho)
        found.append(GraphPair(rho, phi))
        if len(found) >= limit:
            break
    logger.debug(f"find_graph_pairs({alg!r}, d={d}, seed={seed}): {len(found)} pairs")
    return found


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

@dataclass
class SuiteResult:
    name: str
    seed: int
    checks: int = 0
    failures: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, message: str, progress_callback: Optional[ProgressCallback] = None) -> None:
        self.checks += 1
        if not passed:
            self.failures.append(message)
            logger.error(f"{self.name}: {message}")
            emit(progress_callback, ProgressType.CHECK_FAILED, message, metadata={"suite": self.name})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.name,
            "seed": self.seed,
            "checks": self.checks,
            "ok": self.ok,
            "failures": list(self.failures),
            "details": dict(self.details),
        }

    def describe(self) -> str:
        verdict = "passed" if self.ok else f"FAILED ({len(self.failures)} failures)"
        lines = [f"{self.name} (seed {self.seed}): {self.checks} checks {verdict}"]
        lines.extend(f"  {failure}" for failure in self.failures)
        return "\n".join(lines)


def _degree_budget(n: int) -> int:
    """Largest total degree of a Jacobi triple evaluated on an n-dimensional algebra."""
    return 5 if n >= 3 else 7


def balavoine_selftest(
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    tables: int = 100,
    progress_callback: Optional[ProgressCallback] = None,
) -> SuiteResult:
    """Graded skew-symmetry and Jacobi on random cochains, and [a, a] = 0 iff Leibniz on random tables."""
    seed = Config.get_default_seed() if seed is None else seed
    trials = Config.get_default_trials() if trials is None else trials
    rng = random.Random(seed)
    result = SuiteResult("balavoine-selftest", seed)
    total = trials + tables
    emit(progress_callback, ProgressType.SUITE_START, f"Balavoine suite, seed {seed}", total_steps=total)

    for t in range(trials):
        n = rng.randint(1, 3)
        while True:
            degrees = [rng.randint(1, 3) for _ in range(3)]
            if sum(degrees) <= _degree_budget(n):
                break
        P, Q, R = (random_cochain(rng, k, n, n) for k in degrees)
        label = f"trial {t + 1}: n={n} degrees {degrees}"
        result.record(graded_skew_defect(P, Q).is_zero(), f"{label}: graded skew-symmetry fails", progress_callback)
        result.record(graded_jacobi_defect(P, Q, R).is_zero(), f"{label}: graded Jacobi fails", progress_callback)
        emit(progress_callback, ProgressType.TRIAL_COMPLETE, label, current_step=t + 1, total_steps=total)

    pool = {d: _embedding_pool(d) for d in (1, 2, 3)}
    leibniz_count = 0
    for t in range(tables):
        n = rng.randint(1, 3)
        if t % 4 == 0:
            while True:
                phi = random_phi(rng, n, pool[n])
                if graph_check(phi):
                    break
            alg = induced_bracket(phi, "random")
        else:
            alg = random_table(rng, n)
        square = bracket_square(alg)
        leibniz = bool(is_leibniz(alg))
        leibniz_count += leibniz
        label = f"table {t + 1}: n={n}"
        result.record(leibniz == square.is_zero(), f"{label}: [a,a] = 0 disagrees with the Leibniz identity",
                      progress_callback)
        result.record(square == leibniz_identity_cochain(bracket_cochain(alg)),
                      f"{label}: [a,a] differs from its direct expansion", progress_callback)
        emit(progress_callback, ProgressType.TRIAL_COMPLETE, label, current_step=trials + t + 1, total_steps=total)

    result.details = {"trials": trials, "tables": tables, "leibniz_tables": leibniz_count}
    logger.info(result.describe().splitlines()[0])
    emit(progress_callback, ProgressType.SUITE_COMPLETE, result.describe().splitlines()[0],
         current_step=total, total_steps=total, metadata=result.to_dict())
    return result


def graph_criterion_suite(
    seed: Optional[int] = None,
    samples: int = 100,
    max_d: int = 3,
    progress_callback: Optional[ProgressCallback] = None,
) -> SuiteResult:
    """graph_check agrees with closure of the graph; passing phi induce Leibniz brackets."""
    seed = Config.get_default_seed() if seed is None else seed
    rng = random.Random(seed)
    result = SuiteResult("graph-criterion", seed)
    pool = {d: _embedding_pool(d) for d in range(1, max_d + 1)}
    passing = 0
    emit(progress_callback, ProgressType.SUITE_START, f"Graph criterion suite, seed {seed}", total_steps=samples)
    for t in range(samples):
        d = rng.randint(1, max_d)
        phi = random_phi(rng, d, pool[d])
        verdict = bool(graph_check(phi))
        passing += verdict
        label = f"sample {t + 1}: d={d}"
        result.record(verdict == graph_closure_check(phi), f"{label}: graph criterion disagrees with closure",
                      progress_callback)
        if verdict:
            result.record(bool(is_leibniz(induced_bracket(phi))), f"{label}: induced bracket is not Leibniz",
                          progress_callback)
        emit(progress_callback, ProgressType.TRIAL_COMPLETE, label, current_step=t + 1, total_steps=samples)
    result.details = {"embedding_tensors": passing, "other": samples - passing}
    logger.info(result.describe().splitlines()[0])
    emit(progress_callback, ProgressType.SUITE_COMPLETE, result.describe().splitlines()[0],
         current_step=samples, total_steps=samples, metadata=result.to_dict())
    return result


def adjoint_correspondence_suite(
    alg: LeibnizAlgebra,
    seed: Optional[int] = None,
    samples: int = 50,
    max_degree: int = 2,
    progress_callback: Optional[ProgressCallback] = None,
) -> SuiteResult:
    """f <-> (ad_L o f, f) round-trips and carries the LP coboundary to delta."""
    seed = Config.get_default_seed() if seed is None else seed
    rng = random.Random(seed)
    result = SuiteResult(f"adjoint-correspondence {alg.name or 'g'}", seed)
    rep = adjoint_rep(alg)
    rho = adjoint_omnirep(alg)
    n = alg.dim
    emit(progress_callback, ProgressType.SUITE_START, result.name, total_steps=samples)
    for t in range(samples):
        k = rng.randint(0, max_degree)
        f = random_cochain(rng, k, n, n)
        omni = adjoint_correspondence(alg, f)
        label = f"sample {t + 1}: degree {k}"
        result.record(adjoint_correspondence(alg, omni) == f, f"{label}: correspondence does not round-trip",
                      progress_callback)
        result.record(omni_coboundary(rho, omni) == adjoint_correspondence(alg, coboundary(rep, f)),
                      f"{label}: delta does not match the LP coboundary", progress_callback)
        emit(progress_callback, ProgressType.TRIAL_COMPLETE, label, current_step=t + 1, total_steps=samples)
    logger.info(result.describe().splitlines()[0])
    emit(progress_callback, ProgressType.SUITE_COMPLETE, result.describe().splitlines()[0],
         current_step=samples, total_steps=samples, metadata=result.to_dict())
    return result
