import itertools
import json
from collections import deque

import numpy as np
import pytest

from alphaspectra.campaigns import (
    SC_CLASS_COUNTS,
    SC_LABELED_COUNTS,
    decide_order,
    enumerate_sc_digraphs,
    merge_reports,
    random_sc_digraph,
    verify_bipartite_minimum,
    verify_family_extremes,
    verify_global_minima,
    verify_transform_lemmas,
)
from alphaspectra.digraph import canonical_key, is_strongly_connected
from alphaspectra.errors import InfeasibleError, InvalidParamsError, TooLargeError
from alphaspectra.families import FamilySpec, generate, list_bicyclic
from alphaspectra.spectral import spectral_radius


def oracle_classes(n):
    """Labeled enumeration with BFS connectivity and permutation dedupe on
    arc tuples; shares nothing with the packed-mask kernel path."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    perms = list(itertools.permutations(range(n)))
    seen = set()
    labeled = 0
    for mask in range(1 << len(pairs)):
        arcs = [pairs[b] for b in range(len(pairs)) if (mask >> b) & 1]
        adj = [[] for _ in range(n)]
        for i, j in arcs:
            adj[i].append(j)
        ok = True
        for s in range(n):
            seen_v = 1 << s
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in adj[v]:
                    if not (seen_v >> w) & 1:
                        seen_v |= 1 << w
                        queue.append(w)
            if seen_v != (1 << n) - 1:
                ok = False
                break
        if not ok:
            continue
        labeled += 1
        seen.add(min(tuple(sorted((p[i], p[j]) for i, j in arcs)) for p in perms))
    return labeled, len(seen)


class TestEnumeration:
    def test_counts_against_oracle(self):
        for n in (2, 3, 4):
            labeled, classes = oracle_classes(n)
            assert labeled == SC_LABELED_COUNTS[n]
            assert classes == SC_CLASS_COUNTS[n]
            assert len(enumerate_sc_digraphs(n)) == classes

    def test_n5_count_fixture(self):
        # the 5048 figure was produced once by the oracle above (120 s in
        # pure python) and frozen; the kernel must keep reproducing it
        assert len(enumerate_sc_digraphs(5)) == SC_CLASS_COUNTS[5]

    def test_all_strongly_connected_and_distinct(self):
        classes = enumerate_sc_digraphs(4)
        keys = {canonical_key(d) for d in classes}
        assert len(keys) == len(classes)
        assert all(is_strongly_connected(d) for d in classes)

    def test_bounds(self):
        with pytest.raises(TooLargeError):
            enumerate_sc_digraphs(6)
        with pytest.raises(InvalidParamsError):
            enumerate_sc_digraphs(1)

    def test_bicyclic_classes_match_enumeration(self):
        # the bicyclic generator must hit exactly the |E| = |V| + 1 classes
        for n in (4, 5):
            enumerated = {
                canonical_key(d) for d in enumerate_sc_digraphs(n) if len(d.arcs) == n + 1
            }
            generated = {canonical_key(generate(s)) for s in list_bicyclic(n)}
            assert generated == enumerated


class TestFamilyExtremes:
    def test_infty_8_3(self):
        report = verify_family_extremes("infty", 8, 3, 0.5)
        assert report.passed()
        labels = [it.label for it in report.items]
        assert labels[-1] == "infty:1,1,5"
        assert labels[0] == "infty:2,2,3"

    def test_bicyclic_ranking(self):
        report = verify_family_extremes("bicyclic", 6, 2, 0.0)
        assert report.passed()
        assert [it.label for it in report.items[:3]] == [
            "theta:0,1;3",
            "theta:1,1;2",
            "theta:0,2;2",
        ]

    def test_theta_degenerate_domain(self):
        report = verify_family_extremes("theta", 4, 3, 0.25)
        assert report.passed()
        assert len(report.items) == 1

    def test_combined(self):
        report = verify_family_extremes("combined", 9, 3, 0.25)
        assert report.passed()
        assert report.items[-1].label == "infty:1,1,6"
        assert report.items[0].label == "theta:0,1,1;5"

    def test_bicyclic_needs_n5(self):
        with pytest.raises(InfeasibleError):
            verify_family_extremes("bicyclic", 4, 2, 0.0)


class TestGlobalMinima:
    def test_low_alpha_passes(self):
        for alpha in (0.0, 0.5):
            report = verify_global_minima(5, alpha)
            assert report.passed()
            assert all(v.status == "pass" for v in report.verdicts)

    def test_high_alpha_exploratory(self):
        report = verify_global_minima(5, 0.75)
        assert all(v.status == "exploratory" for v in report.verdicts)
        assert report.passed()

    def test_item_count_is_class_count(self):
        report = verify_global_minima(5, 0.0)
        assert len(report.items) == SC_CLASS_COUNTS[5]

    def test_rank_one_is_cycle_radius_one(self):
        report = verify_global_minima(5, 0.3)
        assert abs(report.items[0].radius - 1.0) <= 1e-9

    def test_bad_params(self):
        with pytest.raises(TooLargeError):
            verify_global_minima(6, 0.0)
        with pytest.raises(InvalidParamsError):
            verify_global_minima(4, 0.0)


class TestBipartiteMinimum:
    def test_enumeration_branch(self):
        report = verify_bipartite_minimum(5, 2, 2, 0.3)
        assert report.passed()
        uniq = [v for v in report.verdicts if "unique bipartite minimum" in v.claim]
        assert len(uniq) == 1 and uniq[0].status == "pass"

    def test_even_tie_at_alpha_zero(self):
        report = verify_bipartite_minimum(8, 2, 2, 0.0)
        assert report.passed()
        tie = [v for v in report.verdicts if "B6 = B5" in v.claim]
        assert tie and tie[0].status == "pass"

    def test_odd_chain_with_cross_links(self):
        report = verify_bipartite_minimum(8, 3, 2, 0.5)
        assert report.passed()
        claims = " | ".join(v.claim for v in report.verdicts)
        assert "B5 at n-1 > B1 at n" in claims
        assert "B6 > B5 at n-1" in claims

    def test_invalid_params(self):
        with pytest.raises(InvalidParamsError):
            verify_bipartite_minimum(5, 2, 1, 0.0)
        with pytest.raises(InvalidParamsError):
            verify_bipartite_minimum(4, 2, 2, 0.0)


class TestTransformLemmas:
    def test_small_run_clean(self):
        report = verify_transform_lemmas(30, seed=11)
        assert report.passed()
        by_name = {v.claim: v for v in report.verdicts}
        assert set(by_name) == {
            "subdigraph lemma",
            "subdivision lemma",
            "retarget lemma",
            "perron-order lemma",
        }
        for v in report.verdicts:
            assert v.status == "pass"
            assert "instances checked" in v.detail

    def test_cycle_subdivision_skipped(self):
        report = verify_transform_lemmas(1, seed=1)
        sub = next(v for v in report.verdicts if v.claim == "subdivision lemma")
        assert "skipped" in sub.detail  # the fleet contains a pure cycle

    def test_seed_reproducible(self):
        a = verify_transform_lemmas(10, seed=5)
        b = verify_transform_lemmas(10, seed=5)
        assert [(i.label, i.radius) for i in a.items] == [(i.label, i.radius) for i in b.items]

    def test_bad_trials(self):
        with pytest.raises(InvalidParamsError):
            verify_transform_lemmas(0, seed=1)


class TestRandomScDigraph:
    def test_always_strongly_connected(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            d = random_sc_digraph(rng, int(rng.integers(2, 9)))
            assert is_strongly_connected(d)


class TestReports:
    def test_json_shape(self):
        report = verify_family_extremes("infty", 6, 2, 0.25)
        data = json.loads(report.to_json())
        assert set(data) == {"campaign", "alpha_grid", "items", "verdicts", "runtime_s"}
        assert data["alpha_grid"] == [0.25]
        for item in data["items"]:
            assert set(item) == {"label", "alpha", "radius", "lo", "hi"}
            assert item["lo"] <= item["radius"] <= item["hi"]
        for verdict in data["verdicts"]:
            assert set(verdict) == {"claim", "status", "detail"}

    def test_csv_shape(self):
        report = verify_family_extremes("theta", 7, 2, 0.0)
        lines = report.to_csv().splitlines()
        assert lines[0] == "spec,alpha,radius,lo,hi"
        assert len(lines) == len(report.items) + 1

    def test_csv_quotes_spec_commas(self):
        import csv as csvmod
        import io

        report = verify_family_extremes("infty", 6, 3, 0.0)
        rows = list(csvmod.reader(io.StringIO(report.to_csv())))
        assert rows[1][0].startswith("infty:")
        assert len(rows[1]) == 5

    def test_merge(self):
        a = verify_family_extremes("infty", 6, 2, 0.0)
        b = verify_family_extremes("infty", 6, 2, 0.5)
        merged = merge_reports("family-extremes", [a, b])
        assert merged.alpha_grid == [0.0, 0.5]
        assert len(merged.items) == len(a.items) + len(b.items)

    def test_bitwise_reproducible(self):
        a = verify_family_extremes("bicyclic", 7, 2, 0.25)
        b = verify_family_extremes("bicyclic", 7, 2, 0.25)
        assert [i.radius for i in a.items] == [i.radius for i in b.items]
        assert [i.lo for i in a.items] == [i.lo for i in b.items]
        assert [(v.claim, v.status) for v in a.verdicts] == [
            (v.claim, v.status) for v in b.verdicts
        ]

    def test_rerun_from_serialized_specs(self):
        # a report rebuilt from its own item labels reproduces the verdicts
        from alphaspectra.families import parse_spec

        report = verify_family_extremes("infty", 8, 2, 0.5)
        labels = [it.label for it in report.items]
        radii = {}
        for label in labels:
            res = spectral_radius(generate(parse_spec(label)), 0.5)
            radii[label] = res.radius
        for item in report.items:
            assert radii[item.label] == item.radius


class TestDecideOrder:
    def test_certified_and_margin(self):
        a = spectral_radius(generate(FamilySpec.cycle(5)), 0.0)
        b = spectral_radius(generate(FamilySpec.complete(4)), 0.0)
        assert decide_order(a, b) == -1
        assert decide_order(b, a) == 1
        assert decide_order(a, a) is None
