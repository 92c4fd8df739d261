"""
Unit tests for the comparisons between Loday-Pirashvili and omni-cohomology,
random generators and the randomized suites.
"""

import random

import pytest

from omnileib.omni import graph_check, graph_factorization_failure, omnirep_check
from omnileib.progress import ProgressTracker, ProgressType
from omnileib.verify import (
    Comparison,
    SuiteResult,
    adjoint_correspondence_suite,
    adjoint_graph_pair,
    balavoine_selftest,
    compare_adjoint,
    compare_graph,
    compare_trivial,
    find_graph_pairs,
    graph_criterion_suite,
    random_cochain,
    random_phi,
    random_table,
)


class TestCompare:
    """One comparison per kind of omni-representation."""

    @pytest.mark.unit
    def test_adjoint(self, l2):
        comparison = compare_adjoint(l2, 2)
        assert comparison.equal
        assert comparison.lp_dims == comparison.omni_dims
        assert comparison.compared_degrees == [0, 1, 2]

    @pytest.mark.unit
    def test_trivial(self, l2, abelian2):
        for alg in (l2, abelian2):
            comparison = compare_trivial(alg, 2)
            assert comparison.equal, comparison.describe()
        assert compare_trivial(l2, 2).lp_dims == [1, 1, 1]

    @pytest.mark.unit
    def test_trivial_on_perfect_algebra(self, sl2):
        comparison = compare_trivial(sl2, 2)
        assert comparison.lp_dims == [1, 0, 0]
        assert comparison.omni_dims == [0, 0, 0]
        assert comparison.compared_degrees == [1, 2]
        assert comparison.equal
        assert "(excluded)" in comparison.describe()

    @pytest.mark.unit
    @pytest.mark.slow
    def test_trivial_on_perfect_algebra_degree_three(self, sl2):
        comparison = compare_trivial(sl2, 3)
        assert comparison.lp_dims == [1, 0, 0, 0]
        assert comparison.omni_dims == [0, 0, 0, 0]
        assert comparison.equal

    @pytest.mark.unit
    def test_graph_with_adjoint_pair(self, l2):
        pair = adjoint_graph_pair(l2)
        comparison = compare_graph(pair.rho, pair.phi, 2)
        assert comparison.equal
        assert comparison.lp_dims == compare_adjoint(l2, 2).lp_dims

    @pytest.mark.unit
    @pytest.mark.slow
    def test_catalog_adjoint(self):
        from omnileib.catalog import catalog
        for name, alg in catalog().items():
            if alg.dim <= 3:
                assert compare_adjoint(alg, 2).equal, name

    @pytest.mark.unit
    def test_to_dict_and_describe(self, l2):
        comparison = compare_adjoint(l2, 1)
        data = comparison.to_dict()
        assert data["mode"] == "adjoint"
        assert data["algebra"] == "L2"
        assert data["equal"] is True
        assert comparison.describe().splitlines()[-1] == "verdict: equal"

    @pytest.mark.unit
    def test_unequal_verdict_text(self):
        comparison = Comparison("adjoint", "g", 1, [1, 2], [1, 3], [0, 1], False)
        assert comparison.describe().splitlines()[-1] == "verdict: DIFFERENT"


class TestGraphPairs:
    """Omni-representations factoring through an embedding tensor."""

    @pytest.mark.unit
    def test_adjoint_graph_pair(self, sl2):
        pair = adjoint_graph_pair(sl2)
        assert graph_check(pair.phi)
        assert graph_factorization_failure(pair.rho, pair.phi) is None

    @pytest.mark.unit
    def test_find_graph_pairs(self, l2):
        pairs = find_graph_pairs(l2, 2, seed=0)
        assert [p.rho for p in pairs] == [p.rho for p in find_graph_pairs(l2, 2, seed=0)]
        for pair in pairs:
            assert graph_check(pair.phi)
            assert omnirep_check(pair.rho)
            assert graph_factorization_failure(pair.rho, pair.phi) is None

    @pytest.mark.unit
    @pytest.mark.slow
    def test_found_pairs_compare_equal(self, l2):
        for pair in find_graph_pairs(l2, 2, seed=0, limit=3):
            assert compare_graph(pair.rho, pair.phi, 2).equal


class TestRandomGenerators:
    """Seeded generators are reproducible."""

    @pytest.mark.unit
    def test_reproducible(self):
        assert random_table(random.Random(7), 3) == random_table(random.Random(7), 3)
        assert random_cochain(random.Random(7), 2, 2, 1) == random_cochain(random.Random(7), 2, 2, 1)

    @pytest.mark.unit
    def test_random_phi_shape(self):
        phi = random_phi(random.Random(0), 2)
        assert phi.shape == (2, 2, 2)


class TestSuites:
    """Randomized suites pass and report progress."""

    @pytest.mark.unit
    def test_balavoine_selftest(self):
        tracker = ProgressTracker()
        result = balavoine_selftest(seed=0, trials=10, tables=20, progress_callback=tracker)
        assert result.ok, result.describe()
        assert result.checks == 2 * 10 + 2 * 20
        assert result.details["tables"] == 20
        assert tracker.events[0].type == ProgressType.SUITE_START
        assert tracker.events[-1].type == ProgressType.SUITE_COMPLETE

    @pytest.mark.unit
    def test_same_seed_same_result(self):
        first = balavoine_selftest(seed=5, trials=5, tables=8)
        second = balavoine_selftest(seed=5, trials=5, tables=8)
        assert first.to_dict() == second.to_dict()

    @pytest.mark.unit
    def test_graph_criterion_suite(self):
        result = graph_criterion_suite(seed=0, samples=30)
        assert result.ok, result.describe()
        assert result.details["embedding_tensors"] + result.details["other"] == 30

    @pytest.mark.unit
    def test_adjoint_correspondence_suite(self, l2):
        result = adjoint_correspondence_suite(l2, seed=0, samples=10)
        assert result.ok, result.describe()
        assert result.checks == 20

    @pytest.mark.unit
    def test_suite_result_records_failures(self):
        tracker = ProgressTracker()
        result = SuiteResult("demo", 0)
        result.record(True, "fine")
        result.record(False, "broken", tracker)
        assert not result.ok
        assert result.failures == ["broken"]
        assert tracker.events[0].type == ProgressType.CHECK_FAILED
        assert "FAILED (1 failures)" in result.describe()
