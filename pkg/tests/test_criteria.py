"""Classification predicates: Reisner CM, linearity, SCM, ACM, classify."""
import pytest
from hypothesis import given, settings

from acmkit.complexes import (
    SimplicialComplex,
    full_simplex,
    irrelevant_complex,
    void_complex,
)
from acmkit.criteria import (
    RouteDisagreement,
    Verdict,
    classify,
    graded_betti_hochster,
    has_linear_resolution_er,
    is_acm_route_a,
    is_acm_route_b,
    is_cohen_macaulay,
    is_componentwise_linear,
    is_scm_dual,
    is_scm_skeleton,
)
from acmkit.harness import enumerate_complexes
from acmkit.homology import FieldSpec
from acmkit.ideals import SquarefreeIdeal, alexander_dual, ideal_of_complex

from conftest import SMALL_FIELDS, fields, nonvoid_complexes
from oracles import koszul_betti

cx = SimplicialComplex.from_facets
ideal = SquarefreeIdeal.from_supports

Q = FieldSpec.rational()
GF2 = FieldSpec.gf(2)

HOLLOW_TRIANGLE = cx([[1, 2], [1, 3], [2, 3]], 3)
EDGE_PLUS_POINT = cx([[1, 2], [3]], 3)
TWO_EDGES = cx([[1, 2], [3, 4]], 4)


class TestCohenMacaulay:
    @pytest.mark.parametrize("f", SMALL_FIELDS, ids=str)
    def test_hollow_triangle_is_cm(self, f):
        ok, witness = is_cohen_macaulay(HOLLOW_TRIANGLE, f)
        assert ok and witness is None

    @pytest.mark.parametrize("f", SMALL_FIELDS, ids=str)
    def test_disconnected_pure_fails_at_empty_face(self, f):
        ok, witness = is_cohen_macaulay(TWO_EDGES, f)
        assert not ok
        assert witness == (0, 0)

    @pytest.mark.parametrize("f", SMALL_FIELDS, ids=str)
    def test_nonpure_fails(self, f):
        ok, witness = is_cohen_macaulay(EDGE_PLUS_POINT, f)
        assert not ok
        assert witness == (0, 0)

    def test_degenerate_complexes_are_cm(self):
        assert is_cohen_macaulay(irrelevant_complex(2), Q)[0]
        assert is_cohen_macaulay(full_simplex(3), Q)[0]

    def test_void_rejected(self):
        with pytest.raises(ValueError):
            is_cohen_macaulay(void_complex(2), Q)

    @given(nonvoid_complexes(), fields)
    def test_cm_implies_pure(self, c, f):
        if is_cohen_macaulay(c, f)[0]:
            assert c.is_pure

    @given(nonvoid_complexes(), fields)
    def test_cm_implies_scm(self, c, f):
        if is_cohen_macaulay(c, f)[0]:
            assert is_scm_skeleton(c, f)


class TestLinearResolution:
    def test_triangle_edge_ideal_is_linear(self):
        assert has_linear_resolution_er(ideal([[1, 2], [1, 3], [2, 3]], 3), Q)

    def test_two_disjoint_supports_not_linear(self):
        assert not has_linear_resolution_er(ideal([[1, 2], [3, 4]], 4), Q)

    def test_principal_is_linear(self):
        assert has_linear_resolution_er(ideal([[3]], 3), Q)

    def test_mixed_degrees_immediately_fail(self):
        assert not has_linear_resolution_er(ideal([[1], [2, 3]], 3), Q)

    def test_zero_and_unit_rejected(self):
        with pytest.raises(ValueError):
            has_linear_resolution_er(SquarefreeIdeal(3, ()), Q)
        with pytest.raises(ValueError):
            has_linear_resolution_er(SquarefreeIdeal(3, (0,)), Q)


class TestHochsterBetti:
    def test_principal_ideal(self):
        table = graded_betti_hochster(ideal([[3]], 3), Q)
        assert table.as_dict() == {(0, 1): 1}

    def test_regular_sequence_koszul(self):
        table = graded_betti_hochster(ideal([[1, 2], [3, 4]], 4), Q)
        assert table.as_dict() == {(0, 2): 2, (1, 4): 1}

    def test_triangle_edge_ideal(self):
        table = graded_betti_hochster(ideal([[1, 2], [1, 3], [2, 3]], 3), Q)
        assert table.as_dict() == {(0, 2): 3, (1, 3): 2}

    def test_zero_and_unit_rejected(self):
        with pytest.raises(ValueError):
            graded_betti_hochster(SquarefreeIdeal(3, ()), Q)
        with pytest.raises(ValueError):
            graded_betti_hochster(SquarefreeIdeal(3, (0,)), Q)

    @given(nonvoid_complexes(max_n=4), fields)
    @settings(max_examples=40, deadline=None)
    def test_agrees_with_koszul_oracle(self, c, f):
        if c.is_full_simplex:
            return
        i = ideal_of_complex(alexander_dual(c))
        assert graded_betti_hochster(i, f).as_dict() == koszul_betti(i, f)

    @given(nonvoid_complexes(max_n=5), fields)
    @settings(max_examples=40, deadline=None)
    def test_degree_zero_row_counts_generators(self, c, f):
        if c.is_full_simplex:
            return
        i = ideal_of_complex(alexander_dual(c))
        expected: dict[int, int] = {}
        for g in i.generators:
            expected[g.bit_count()] = expected.get(g.bit_count(), 0) + 1
        assert graded_betti_hochster(i, f).generator_degrees() == expected


class TestComponentwiseLinear:
    def test_mixed_degree_example_is_linear(self):
        ok, table = is_componentwise_linear(ideal([[3], [1, 2]], 3), Q)
        assert ok
        assert dict(table)[1] and dict(table)[2]

    def test_two_disjoint_supports_fail(self):
        ok, table = is_componentwise_linear(ideal([[1, 2], [3, 4]], 4), Q)
        assert not ok
        assert dict(table)[2] is False

    def test_zero_is_vacuously_linear(self):
        ok, table = is_componentwise_linear(SquarefreeIdeal(3, ()), Q)
        assert ok and table == ()

    def test_unit_rejected(self):
        with pytest.raises(ValueError):
            is_componentwise_linear(SquarefreeIdeal(3, (0,)), Q)


class TestSequentiallyCM:
    def test_edge_plus_point_is_scm(self):
        assert is_scm_skeleton(EDGE_PLUS_POINT, Q)
        assert is_scm_dual(EDGE_PLUS_POINT, Q)

    def test_two_disjoint_edges_not_scm(self):
        assert not is_scm_skeleton(TWO_EDGES, Q)
        assert not is_scm_dual(TWO_EDGES, Q)

    def test_zero_dimensional_is_scm(self):
        c = cx([[1], [2]], 2)
        assert is_scm_skeleton(c, Q)
        assert is_scm_dual(c, Q)

    def test_dual_route_rejects_full_simplex(self):
        with pytest.raises(ValueError):
            is_scm_dual(full_simplex(3), Q)

    def test_skeleton_route_accepts_full_simplex(self):
        assert is_scm_skeleton(full_simplex(3), Q)

    @pytest.mark.parametrize("n", (1, 2, 3, 4))
    @pytest.mark.parametrize("f", (Q, GF2), ids=str)
    def test_routes_agree_exhaustively(self, n, f):
        memo = {}
        for c in enumerate_complexes(n):
            if c.is_void or c.is_full_simplex:
                continue
            assert is_scm_skeleton(c, f, memo) == is_scm_dual(c, f, memo), c


class TestApproximatelyCM:
    def test_edge_plus_point_both_routes(self):
        assert is_acm_route_a(EDGE_PLUS_POINT, Q)
        assert is_acm_route_b(EDGE_PLUS_POINT, Q)

    def test_two_disjoint_edges_fail_both_routes(self):
        assert not is_acm_route_a(TWO_EDGES, Q)
        assert not is_acm_route_b(TWO_EDGES, Q)

    def test_cm_complex_is_not_acm(self):
        assert not is_acm_route_a(HOLLOW_TRIANGLE, Q)
        assert not is_acm_route_b(HOLLOW_TRIANGLE, Q)

    def test_path_plus_point(self):
        c = cx([[1, 2], [1, 3], [4]], 4)
        assert is_acm_route_a(c, Q)
        assert is_acm_route_b(c, Q)

    def test_route_b_rejects_full_simplex(self):
        with pytest.raises(ValueError):
            is_acm_route_b(full_simplex(3), Q)

    @pytest.mark.parametrize("n", (1, 2, 3, 4))
    @pytest.mark.parametrize("f", (Q, GF2), ids=str)
    def test_routes_agree_exhaustively(self, n, f):
        memo = {}
        for c in enumerate_complexes(n):
            if c.is_void or c.is_full_simplex:
                continue
            assert is_acm_route_a(c, f, memo) == is_acm_route_b(c, f, memo), c


class TestClassify:
    def test_running_example_is_acm(self):
        report = classify(EDGE_PLUS_POINT, Q, "both")
        assert report.verdict is Verdict.ACM
        assert report.dual_degrees == frozenset({1, 2})

    def test_hollow_triangle_is_cm(self):
        assert classify(HOLLOW_TRIANGLE, Q, "both").verdict is Verdict.CM

    def test_two_edges_not_scm(self):
        report = classify(TWO_EDGES, Q, "both")
        assert report.verdict is Verdict.NOT_SCM
        assert report.cm_witness == (0, 0)

    def test_full_simplex_short_circuits_to_cm(self):
        report = classify(full_simplex(4), GF2, "both")
        assert report.verdict is Verdict.CM
        assert report.dual_degrees is None

    def test_single_routes(self):
        assert classify(EDGE_PLUS_POINT, Q, "a").verdict is Verdict.ACM
        assert classify(EDGE_PLUS_POINT, Q, "b").verdict is Verdict.ACM

    def test_bad_route_rejected(self):
        with pytest.raises(ValueError):
            classify(EDGE_PLUS_POINT, Q, "c")

    def test_void_rejected(self):
        with pytest.raises(ValueError):
            classify(void_complex(3), Q)

    def test_scm_not_acm_needs_gap_in_cardinalities(self):
        # triangle with a pendant point: facets sizes {1, 3}, SCM but not ACM
        c = cx([[1, 2, 3], [4]], 4)
        report = classify(c, Q, "both")
        assert report.verdict is Verdict.SCM_NOT_ACM

    @given(nonvoid_complexes(), fields)
    def test_acm_implies_two_consecutive_cardinalities(self, c, f):
        report = classify(c, f, "both")
        cards = c.facet_cardinalities()
        if report.verdict is Verdict.CM:
            assert len(cards) == 1
        if report.verdict is Verdict.ACM:
            d = max(cards)
            assert cards == {d - 1, d}

    def test_disagreement_exception_carries_reports(self):
        a = classify(EDGE_PLUS_POINT, Q, "a")
        b = classify(TWO_EDGES, Q, "b")
        err = RouteDisagreement(a, b)
        assert err.report_a is a and err.report_b is b
        assert "route a" in str(err)


class TestEagonReinerEquivalence:
    @pytest.mark.parametrize("n", (1, 2, 3, 4))
    @pytest.mark.parametrize("f", (Q, GF2), ids=str)
    def test_exhaustive_small(self, n, f):
        memo = {}
        for c in enumerate_complexes(n):
            if c.is_void or c.is_full_simplex:
                continue
            lhs = is_cohen_macaulay(c, f, memo)[0]
            dual_ideal = ideal_of_complex(alexander_dual(c))
            rhs = has_linear_resolution_er(dual_ideal, f, memo)
            assert lhs == rhs, c
