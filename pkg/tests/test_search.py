"""Exhaustive enumeration and the three scans built on it."""

from __future__ import annotations

import pytest

from conftest import prism
from symcover.errors import PreconditionError, ResourceLimitError
from symcover.graphs import Graph, canonical_form, generate, is_connected, is_regular
from symcover.search import (
    classify_vt_extremal,
    enum_graphs,
    find_dense_counterexample,
    scan_connected_extremal,
)


# isomorphism class counts on n unlabeled vertices
ALL_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
# (n, k) -> number of k-regular graphs on n vertices
REGULAR_COUNTS = {
    (4, 3): 1, (6, 3): 2, (8, 3): 6, (10, 3): 21,
    (5, 4): 1, (6, 4): 1, (7, 4): 2, (8, 4): 6, (9, 4): 16,
    (6, 5): 1, (8, 5): 3,
    (8, 6): 1, (9, 6): 4,
    (5, 2): 1, (6, 2): 2, (7, 2): 2, (8, 2): 3,
}


class TestEnumeration:
    def test_counts(self):
        for n, want in ALL_COUNTS.items():
            if n <= 6:
                assert len(enum_graphs(n)) == want

    def test_connected_counts(self):
        for n, want in CONNECTED_COUNTS.items():
            if n <= 6:
                assert len(enum_graphs(n, connected_only=True)) == want

    def test_results_are_canonical_and_distinct(self):
        graphs = enum_graphs(5)
        forms = [canonical_form(g) for g in graphs]
        assert forms == sorted(forms)
        assert len(set(forms)) == len(graphs)

    def test_regular_counts(self):
        for (n, k), want in REGULAR_COUNTS.items():
            got = enum_graphs(n, regular_k=k)
            assert len(got) == want, (n, k)
            assert all(is_regular(g, k) for g in got)

    def test_regular_agrees_with_filtered_enumeration(self):
        for n in range(1, 7):
            everything = enum_graphs(n)
            for k in range(n):
                want = sorted(canonical_form(g) for g in everything
                              if is_regular(g, k))
                got = [canonical_form(g) for g in enum_graphs(n, regular_k=k)]
                assert got == want, (n, k)

    def test_cubic_graphs_on_six_vertices(self):
        got = {canonical_form(g)
               for g in enum_graphs(6, connected_only=True, regular_k=3)}
        k33 = Graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
        assert got == {canonical_form(k33), canonical_form(prism())}

    def test_odd_parity_is_empty(self):
        assert enum_graphs(5, regular_k=3) == ()

    def test_degree_too_large_is_empty(self):
        assert enum_graphs(4, regular_k=4) == ()

    def test_zero_regular(self):
        (g,) = enum_graphs(4, regular_k=0)
        assert g.edge_count == 0

    def test_caps(self):
        with pytest.raises(ResourceLimitError):
            enum_graphs(9)
        with pytest.raises(ResourceLimitError):
            enum_graphs(11, regular_k=3)
        with pytest.raises(PreconditionError):
            enum_graphs(-1)


class TestDenseScan:
    def test_small_range_has_no_counterexample(self):
        report = find_dense_counterexample(8, (3, 4))
        assert report.counterexamples == ()
        assert report.candidate_count == len(report.records)
        assert all(verdict == "hypothesis-failed"
                   for _, verdict in report.records)
        # disconnected regular graphs are scanned too
        assert report.candidate_count == (1 + 2 + 6) + (1 + 1 + 2 + 6)

    def test_notes_count_per_degree(self):
        report = find_dense_counterexample(6, (3,))
        assert report.notes == ("degree 3: 3 graphs scanned",)

    def test_doc_shape(self):
        doc = find_dense_counterexample(6, (3,)).to_doc()
        assert doc["scan"] == "dense-neighborhoods"
        assert doc["params"] == {"n_max": "6", "degrees": "[3]"}
        assert doc["counterexamples"] == []
        assert len(doc["records"]) == doc["candidate_count"]

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            find_dense_counterexample(11, (3,))


class TestVtScan:
    def test_small_range_finds_the_complete_graph(self, k5):
        report = classify_vt_extremal(3, 6)
        assert report.classification == (canonical_form(k5),)
        extremal = [r for r in report.records if r[1].startswith("extremal")]
        assert len(extremal) == 1
        assert extremal[0][1] == "extremal plain=1 invariant=5"

    def test_tail_below_three_rejected(self):
        with pytest.raises(PreconditionError):
            classify_vt_extremal(2, 6)

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            classify_vt_extremal(3, 11)


class TestConnectedScan:
    def test_no_wide_extremal_instance_up_to_six(self, k5):
        report = scan_connected_extremal(3, 6)
        assert report.counterexamples == ()
        assert canonical_form(k5) in report.classification
        assert all(not verdict.startswith("extremal-wide")
                   for _, verdict in report.records)

    def test_complete_host_is_the_only_hit_for_longer_tails(self):
        report = scan_connected_extremal(5, 7)
        assert report.classification == (canonical_form(generate("complete:7")),)
        assert report.counterexamples == ()

    def test_vacuous_range_is_reported(self):
        report = scan_connected_extremal(5, 6)
        assert report.candidate_count == 0
        assert report.classification == ()
        assert report.notes == ("no extremal hit in range; nothing to flag",)

    def test_determinism(self):
        a = scan_connected_extremal(3, 6)
        b = scan_connected_extremal(3, 6)
        assert a.records == b.records
        assert a.classification == b.classification

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            scan_connected_extremal(3, 9)
