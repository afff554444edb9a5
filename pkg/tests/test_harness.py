"""Enumeration, random generation, and the cross-checking sweep."""
import pytest

from acmkit.bitsets import vertices_of
from acmkit.complexes import SimplicialComplex
from acmkit.harness import (
    ALL_CHECKS,
    HarnessConfig,
    HarnessReport,
    enumerate_complexes,
    random_complex,
    run,
)
from acmkit.homology import FieldSpec

from oracles import count_antichains

Q = FieldSpec.rational()
GF2 = FieldSpec.gf(2)

DEDEKIND = {1: 3, 2: 6, 3: 20, 4: 168, 5: 7581}


class TestEnumeration:
    def test_n1_by_hand(self):
        got = list(enumerate_complexes(1))
        assert len(got) == 3
        assert got[0].is_void
        facet_sets = {c.facets for c in got}
        assert facet_sets == {(), (0,), (1,)}

    def test_n2_by_hand(self):
        facet_views = {
            tuple(vertices_of(f) for f in c.facets)
            for c in enumerate_complexes(2)
        }
        assert facet_views == {
            (),
            ((),),
            ((1,),),
            ((2,),),
            ((1,), (2,)),
            ((1, 2),),
        }

    @pytest.mark.parametrize("n", (1, 2, 3, 4))
    def test_counts_match_downset_oracle(self, n):
        assert sum(1 for _ in enumerate_complexes(n)) == count_antichains(n)

    def test_n5_count_is_dedekind(self):
        assert sum(1 for _ in enumerate_complexes(5)) == 7581

    @pytest.mark.parametrize("n", (1, 2, 3))
    def test_no_duplicates_and_all_antichains(self, n):
        seen = set()
        for c in enumerate_complexes(n):
            assert c.facets not in seen
            seen.add(c.facets)
            # each yielded value must already be canonical
            assert c == SimplicialComplex.from_masks(c.facets, n)

    def test_deterministic_order(self):
        assert [c.facets for c in enumerate_complexes(3)] == [
            c.facets for c in enumerate_complexes(3)
        ]

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            next(enumerate_complexes(0))
        with pytest.raises(ValueError):
            next(enumerate_complexes(7))


class TestRandomComplex:
    def test_deterministic(self):
        assert random_complex(6, 11, 0.4) == random_complex(6, 11, 0.4)

    def test_seed_changes_output(self):
        outputs = {random_complex(6, s, 0.4).facets for s in range(20)}
        assert len(outputs) > 1

    def test_zero_density_is_void(self):
        assert random_complex(9, 3, 0.0).is_void

    def test_full_density_is_full_simplex(self):
        assert random_complex(9, 3, 1.0).is_full_simplex

    def test_regression_snapshot(self):
        got = [
            list(vertices_of(f)) for f in random_complex(8, 42, 0.3).facets
        ]
        assert got == [
            [1, 2, 3, 4], [1, 2, 3, 8], [1, 3, 4, 5], [1, 3, 5, 8],
            [1, 3, 7, 8], [2, 3, 4, 5], [2, 3, 5, 6], [2, 3, 7, 8],
            [2, 4, 5, 7], [2, 4, 7, 8], [3, 5, 6, 8], [1, 2, 5, 6, 7],
            [1, 2, 6, 7, 8], [2, 3, 4, 6, 8], [3, 4, 5, 7, 8],
            [4, 5, 6, 7, 8],
        ]

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            random_complex(21, 0, 0.5)
        with pytest.raises(ValueError):
            random_complex(4, 0, 1.5)


class TestConfig:
    def test_exhaustive_needs_small_n(self):
        with pytest.raises(ValueError):
            HarnessConfig(n=7, mode="exhaustive")

    def test_random_allows_larger_n(self):
        HarnessConfig(n=12, mode="random")
        with pytest.raises(ValueError):
            HarnessConfig(n=21, mode="random")

    def test_unknown_check_rejected(self):
        with pytest.raises(ValueError):
            HarnessConfig(n=3, checks=frozenset({"nope"}))

    def test_needs_a_field(self):
        with pytest.raises(ValueError):
            HarnessConfig(n=3, fields=())

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            HarnessConfig(n=3, mode="sideways")


class TestRun:
    def test_n3_all_checks_spec_example(self):
        report = run(HarnessConfig(n=3, fields=(GF2,)))
        assert report.complexes_checked == 20
        assert report.total_failures == 0
        assert report.skipped_void == 1

    def test_histogram_sums_to_checked_minus_void(self):
        cfg = HarnessConfig(n=4, fields=(Q, GF2), checks=frozenset({"main"}))
        report = run(cfg)
        for fld in ("rational", "gf:2"):
            hist = report.verdict_histogram[fld]
            assert sum(hist.values()) == (
                report.complexes_checked - report.skipped_void
            )

    def test_worker_count_does_not_change_report(self):
        cfg1 = HarnessConfig(n=4, fields=(Q, GF2), workers=1)
        cfg2 = HarnessConfig(n=4, fields=(Q, GF2), workers=2)
        assert run(cfg1) == run(cfg2)

    def test_random_mode_deterministic_and_partitionable(self):
        base = dict(n=6, fields=(GF2,), mode="random", seed=5, count=40)
        r1 = run(HarnessConfig(**base, workers=1))
        r2 = run(HarnessConfig(**base, workers=3))
        assert r1 == r2
        assert r1.complexes_checked == 40
        assert r1.total_failures == 0

    def test_report_merge_is_commutative(self):
        a = HarnessReport(1, 0, {"er": 1}, {}, {"gf:2": {"CM": 1}}, ())
        b = HarnessReport(2, 1, {"er": 2}, {"er": 1}, {"gf:2": {"ACM": 2}}, ())
        left = a.merged(b)
        right = b.merged(a)
        assert left == right
        assert left.complexes_checked == 3
        assert left.check_passes == {"er": 3}
        assert left.verdict_histogram == {"gf:2": {"CM": 1, "ACM": 2}}

    def test_injected_failure_is_reported(self, monkeypatch):
        import acmkit.harness as harness_mod

        monkeypatch.setattr(
            harness_mod, "is_scm_dual", lambda c, f, memo=None: False
        )
        report = run(HarnessConfig(n=3, fields=(Q,), checks=frozenset({"hh"})))
        assert report.total_failures > 0
        check, fld, facets, detail = report.failures[0]
        assert check == "hh"
        assert fld == "rational"
        assert "skeleton" in detail
        # failure records carry enough to rebuild the complex
        SimplicialComplex.from_facets(facets, 3)

    def test_full_checks_n4_zero_failures(self):
        report = run(HarnessConfig(n=4, fields=(Q, GF2), checks=ALL_CHECKS))
        assert report.total_failures == 0
        assert report.ok
