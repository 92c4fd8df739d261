"""
Unit tests for omni-cochains, delta and the correspondences with Loday-Pirashvili cochains.
"""

import random

import pytest
from hypothesis import given, settings, strategies as st

from omnileib.cochains import Cochain, CochainError
from omnileib.cohomology import coboundary, cohomology_dims
from omnileib.linalg import zeros
from omnileib.omni import GraphError, OmniRep, adjoint_omnirep, trivial_omnireps
from omnileib.omni_cohomology import (
    OmniCochain,
    adjoint_correspondence,
    ambient_coboundary_values,
    graph_correspondence,
    image_representation,
    image_subspace,
    omni_coboundary,
    omni_coboundary_value,
    omni_cohomology_dims,
    omni_cohomology_table,
)
from omnileib.representations import adjoint_rep, trivial_rep
from omnileib.verify import random_cochain


def random_omni_cochain(rng, rho, degree):
    image = image_subspace(rho)
    return OmniCochain(image, random_cochain(rng, degree, rho.n, image.dim))


class TestImage:
    """img(rho) and its representation."""

    @pytest.mark.unit
    def test_adjoint_image(self, l2, sl2):
        assert image_subspace(adjoint_omnirep(l2)).dim == 2
        assert image_subspace(adjoint_omnirep(sl2)).dim == 3

    @pytest.mark.unit
    def test_trivial_image_is_trivial_rep(self, l2):
        (rho,) = trivial_omnireps(l2)
        image, rep = image_representation(rho)
        assert image.dim == 1
        assert rep == trivial_rep(l2)

    @pytest.mark.unit
    def test_zero_omnirep_has_zero_image(self, sl2):
        rho = OmniRep(sl2, 1, zeros((3, 1, 1)), zeros((3, 1)))
        assert image_subspace(rho).dim == 0
        assert omni_cohomology_dims(rho, 2) == [0, 0, 0]

    @pytest.mark.unit
    def test_basis_round_trip(self, sl2):
        image = image_subspace(adjoint_omnirep(sl2))
        for t, b in enumerate(image.basis):
            assert image.contains(b)
            coords = image.coordinates(b)
            assert coords == tuple(1 if s == t else 0 for s in range(image.dim))


class TestOmniCochain:
    """Image-valued cochains."""

    @pytest.mark.unit
    def test_codomain_must_match_image(self, l2):
        image = image_subspace(adjoint_omnirep(l2))
        with pytest.raises(CochainError):
            OmniCochain(image, Cochain.zero(1, 2, 3))

    @pytest.mark.unit
    def test_ambient_round_trip(self, sl2):
        rng = random.Random(3)
        f = random_omni_cochain(rng, adjoint_omnirep(sl2), 1)
        assert OmniCochain.from_ambient(f.image, f.ambient()) == f

    @pytest.mark.unit
    def test_from_ambient_outside_image(self, l2):
        (rho,) = trivial_omnireps(l2)
        image = image_subspace(rho)
        # (A, u) = (1, 0) is not in span{(0, 1)}
        ambient = Cochain.from_flat(1, 2, 2, [1, 0, 0, 0])
        with pytest.raises(CochainError):
            OmniCochain.from_ambient(image, ambient)


class TestDelta:
    """delta through img(rho) against the direct evaluation in ol(V)."""

    @pytest.mark.unit
    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=0, max_value=2))
    def test_delta_matches_direct_evaluation(self, seed, degree):
        from omnileib.catalog import get_algebra
        from omnileib.cochains import multi_indices
        rng = random.Random(seed)
        for name in ("L2", "nf3", "sl2"):
            rho = adjoint_omnirep(get_algebra(name))
            f = random_omni_cochain(rng, rho, degree)
            delta = omni_coboundary(rho, f)
            direct = ambient_coboundary_values(rho, f)
            for indices, value in zip(multi_indices(rho.n, degree + 1), direct):
                assert delta.value_element(indices) == value

    @pytest.mark.unit
    def test_delta_squared(self, sl2):
        rho = adjoint_omnirep(sl2)
        f = random_omni_cochain(random.Random(0), rho, 1)
        assert omni_coboundary(rho, omni_coboundary(rho, f)).cochain.is_zero()

    @pytest.mark.unit
    def test_wrong_arity(self, l2):
        rho = adjoint_omnirep(l2)
        f = OmniCochain.zero(image_subspace(rho), 1, 2)
        with pytest.raises(CochainError):
            omni_coboundary_value(rho, f, (0,))


class TestOmniCohomologyDims:
    """Dimension tables of the standard omni-representations."""

    @pytest.mark.unit
    def test_adjoint_matches_lp(self, l2):
        assert omni_cohomology_dims(adjoint_omnirep(l2), 2) == cohomology_dims(adjoint_rep(l2), 2)

    @pytest.mark.unit
    def test_abelian_trivial(self, abelian2):
        for rho in trivial_omnireps(abelian2):
            assert omni_cohomology_dims(rho, 2) == [1, 2, 4]

    @pytest.mark.unit
    def test_table(self, l2):
        (rho,) = trivial_omnireps(l2)
        table = omni_cohomology_table(rho, 2)
        assert table.cochain_dims == (1, 2, 4)
        assert list(table.dims) == [1, 1, 1]


class TestCorrespondences:
    """f <-> phi o f + f."""

    @pytest.mark.unit
    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=0, max_value=2))
    def test_adjoint_round_trip_and_intertwining(self, seed, degree):
        from omnileib.catalog import get_algebra
        rng = random.Random(seed)
        for name in ("L2", "r2", "sl2"):
            alg = get_algebra(name)
            f = random_cochain(rng, degree, alg.dim, alg.dim)
            omni = adjoint_correspondence(alg, f)
            assert isinstance(omni, OmniCochain)
            assert adjoint_correspondence(alg, omni) == f
            assert omni_coboundary(adjoint_omnirep(alg), omni) == adjoint_correspondence(
                alg, coboundary(adjoint_rep(alg), f)
            )

    @pytest.mark.unit
    def test_graph_correspondence_of_adjoint_pair(self, l2):
        rho = adjoint_omnirep(l2)
        f = random_cochain(random.Random(1), 2, 2, 2)
        assert graph_correspondence(rho, rho.phi, f) == adjoint_correspondence(l2, f)

    @pytest.mark.unit
    def test_graph_correspondence_requires_factorization(self, l2):
        rho = adjoint_omnirep(l2)
        with pytest.raises(GraphError):
            graph_correspondence(rho, zeros((2, 2, 2)), Cochain.zero(1, 2, 2))

    @pytest.mark.unit
    def test_codomain_checked(self, l2):
        with pytest.raises(CochainError):
            adjoint_correspondence(l2, Cochain.zero(1, 2, 3))
