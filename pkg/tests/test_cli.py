"""Command line behavior: documents, exit codes, input forms."""

from __future__ import annotations

import json

import pytest

from conftest import circulant, petersen
from symcover.cli import main
from symcover.graphs import Graph, emit_graph6, generate


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv) -> tuple[int, dict]:
    code, out, err = run(capsys, *argv, "--json")
    assert err == ""
    return code, json.loads(out)


K33 = "g6:" + emit_graph6(Graph(6, [(u, v) for u in range(3)
                                    for v in range(3, 6)]))


class TestGen:
    def test_family(self, capsys):
        code, doc = run_json(capsys, "gen", "cocktail:6")
        assert code == 0
        assert doc == {"spec": "cocktail:6", "graph6": doc["graph6"],
                       "n": 6, "edges": 12}

    def test_bad_spec_exits_2(self, capsys):
        code, out, err = run(capsys, "gen", "cocktail:5")
        assert code == 2
        assert err.startswith("error:")

    def test_round_trip_through_info(self, capsys):
        code, doc = run_json(capsys, "gen", "complete:5")
        code2, doc2 = run_json(capsys, "info", "g6:" + doc["graph6"])
        assert code2 == 0
        assert doc2["automorphism_order"] == 120


class TestInfo:
    def test_complete_graph(self, capsys):
        code, doc = run_json(capsys, "info", "complete:5")
        assert code == 0
        assert doc["n"] == 5
        assert doc["automorphism_order"] == 120
        assert doc["orbit_count"] == 1
        assert doc["vertex_transitive"] is True

    def test_human_rendering(self, capsys):
        code, out, err = run(capsys, "info", "tailed-star:3")
        assert code == 0
        assert "vertex_transitive: False" in out
        assert "orbit_count: 4" in out

    def test_graph6_file(self, tmp_path, capsys):
        path = tmp_path / "g.g6"
        path.write_text(emit_graph6(petersen()) + "\n")
        code, doc = run_json(capsys, "info", str(path))
        assert code == 0
        assert doc["automorphism_order"] == 120
        assert doc["n"] == 10

    def test_edge_list_file(self, tmp_path, capsys):
        path = tmp_path / "g.edges"
        path.write_text("n 4\n0 1\n1 2\n2 3\n3 0\n")
        code, doc = run_json(capsys, "info", str(path))
        assert code == 0
        assert doc["degree_sequence"] == [2, 2, 2, 2]

    def test_unreadable_argument_exits_2(self, capsys):
        code, out, err = run(capsys, "info", "no-such-file")
        assert code == 2
        assert "error:" in err


class TestRepr:
    def test_expensive_instance(self, capsys):
        code, doc = run_json(capsys, "repr", "--pattern", "tailed-star:3",
                             "--host", "complete:5")
        assert code == 0
        assert doc["vertex_representativity"] == 1
        assert doc["symmetric_representativity"] == 5
        assert doc["ratio"] == 5
        assert doc["is_extremal"] is True
        assert doc["is_expensive_instance"] is True

    def test_node_budget_flag(self, capsys):
        code, out, err = run(capsys, "repr", "--pattern", "complete:3",
                             "--host", "complete:9", "--node-budget", "5")
        assert code == 2
        assert "error:" in err

    def test_node_budget_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SYMCOVER_NODE_BUDGET", "5")
        code, out, err = run(capsys, "repr", "--pattern", "complete:3",
                             "--host", "complete:9")
        assert code == 2

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SYMCOVER_NODE_BUDGET", "5")
        code, doc = run_json(capsys, "repr", "--pattern", "complete:3",
                             "--host", "complete:9",
                             "--node-budget", str(10**8))
        assert code == 0
        assert doc["vertex_representativity"] == 7

    def test_bad_env_value_exits_2(self, capsys, monkeypatch):
        monkeypatch.setenv("SYMCOVER_NODE_BUDGET", "plenty")
        code, out, err = run(capsys, "repr", "--pattern", "complete:3",
                             "--host", "complete:4")
        assert code == 2


class TestChecks:
    def test_orbit_sum_with_computed_minimum(self, capsys):
        code, doc = run_json(capsys, "check", "thm1.1", "--pattern",
                             "tailed-star:3", "--host", "complete:5")
        assert code == 0
        assert doc["holds"] is True
        assert doc["minimum"] == 1

    def test_orbit_sum_with_explicit_set(self, capsys):
        code, doc = run_json(capsys, "check", "thm1.1", "--pattern",
                             "complete:3", "--host", "complete:4",
                             "--set", "0,1")
        assert code == 0
        assert doc["minimum"] == "3/2"

    def test_orbit_sum_non_hitting_set_exits_2(self, capsys):
        code, out, err = run(capsys, "check", "thm1.1", "--pattern",
                             "complete:3", "--host", "complete:4",
                             "--set", "0")
        assert code == 2
        assert "error:" in err

    def test_boundary(self, capsys):
        code, doc = run_json(capsys, "check", "cor1.2", "--pattern",
                             "tailed-star:3", "--host", "complete:5")
        assert code == 0
        assert doc["all_hold"] is True

    def test_boundary_not_applicable_is_success(self, capsys):
        code, doc = run_json(capsys, "check", "cor1.2", "--pattern",
                             "complete:3", "--host", "complete:4")
        assert code == 0
        assert doc["applicable"] is False

    def test_density(self, capsys):
        code, doc = run_json(capsys, "check", "utv2.1", "--pattern",
                             "tailed-star:3", "--host", "complete:5",
                             "--set", "2")
        assert code == 0
        assert doc["holds"] is True

    def test_containment(self, capsys):
        code, doc = run_json(capsys, "check", "thm2.2", "--pattern",
                             "path:3", "--host", "cycle:6")
        assert code == 0
        assert doc["holds"] is True

    def test_neighborhood(self, capsys):
        code, doc = run_json(capsys, "check", "neighborhood",
                             "g6:" + emit_graph6(petersen()))
        assert code == 0
        assert doc["hypothesis_met"] is False
        assert doc["regular_degree"] == 3

    def test_expansion(self, capsys):
        code, doc = run_json(capsys, "check", "expansion", "--host", "path:4",
                             "--orbit-a", "0,3", "--orbit-b", "1,2",
                             "--source", "0")
        assert code == 0
        assert doc["holds"] is True

    def test_expansion_bad_orbit_exits_2(self, capsys):
        code, out, err = run(capsys, "check", "expansion", "--host", "path:4",
                             "--orbit-a", "0,1", "--orbit-b", "2,3",
                             "--source", "0")
        assert code == 2

    def test_weights_default_set(self, capsys):
        host = "g6:" + emit_graph6(circulant(8, (2, 3, 4)))
        code, doc = run_json(capsys, "check", "weights", "--host", host,
                             "--pair", "0,4", "--tail", "3")
        assert code == 0
        assert doc["function"]["total"] == 4
        assert doc["verification"]["holds"] is True

    def test_weights_violating_set_exits_1(self, capsys):
        code, doc = run_json(capsys, "check", "weights", "--host", K33,
                             "--pair", "0,3", "--tail", "3", "--set", "0")
        assert code == 1
        assert doc["verification"]["holds"] is False


class TestSymmetrize:
    def test_transitive_host(self, capsys):
        code, doc = run_json(capsys, "symmetrize", "--host", "complete:5",
                             "--set", "0", "--max-weight", "5")
        assert code == 0
        assert doc["invariant_set"] == [0, 1, 2, 3, 4]
        assert doc["size_bound"] == 5

    def test_fractional_bound(self, capsys):
        code, doc = run_json(capsys, "symmetrize", "--host", "complete:5",
                             "--set", "0", "--max-weight", "5/2")
        assert code == 0
        assert doc["invariant_set"] == []
        assert doc["size_bound"] == "5/2"

    def test_bad_fraction_exits_2(self, capsys):
        code, out, err = run(capsys, "symmetrize", "--host", "complete:5",
                             "--set", "0", "--max-weight", "a lot")
        assert code == 2


class TestSearches:
    def test_dense(self, capsys):
        code, doc = run_json(capsys, "search", "dense", "--max-n", "6",
                             "--degree", "3")
        assert code == 0
        assert doc["counterexamples"] == []
        assert doc["candidate_count"] == 3

    def test_dense_degree_range_syntax(self, capsys):
        code, doc = run_json(capsys, "search", "dense", "--max-n", "6",
                             "--degree", "3..4")
        assert code == 0
        assert doc["params"]["degrees"] == "[3, 4]"

    def test_vt_extremal(self, capsys):
        code, doc = run_json(capsys, "search", "vt-extremal", "--tail", "3",
                             "--max-n", "6")
        assert code == 0
        assert doc["classification"] == [emit_graph6(generate("complete:5"))]

    def test_connected_extremal_human_output(self, capsys):
        code, out, err = run(capsys, "search", "connected-extremal",
                             "--tail", "3", "--max-n", "6")
        assert code == 0
        assert "D~{ extremal plain=1 invariant=5" in out
        assert "records:" not in out
        assert "counterexamples: []" in out


class TestUsage:
    def test_no_arguments(self, capsys):
        assert main([]) == 2

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_help_exits_0(self, capsys):
        assert main(["--help"]) == 0
