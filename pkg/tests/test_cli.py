"""Command line interface: exit codes, JSON reports, DOT export."""

from __future__ import annotations

import json

import pytest

from negset import NEG, POS, SignedGraph, serialize
from negset.cli import (
    EXIT_FAILS,
    EXIT_HOLDS,
    EXIT_MINUS_K5,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    export_dot,
    main,
)
from negset.graph import complete_graph, cycle_graph


@pytest.fixture
def write_sg(tmp_path):
    def _write(g: SignedGraph, name: str = "input.sg") -> str:
        p = tmp_path / name
        p.write_text(serialize(g))
        return str(p)

    return _write


@pytest.fixture
def c5_one_negative(write_sg):
    return write_sg(cycle_graph(5).negate_edges([(0, 1)]))


def run_json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


class TestBalanceCommand:
    def test_balanced_graph(self, capsys, write_sg):
        path = write_sg(cycle_graph(4).negate_edges([(0, 1), (1, 2)]))
        code, report = run_json(capsys, ["balance", path, "--json"])
        assert code == EXIT_HOLDS
        assert report["balanced"] is True
        assert report["negative_circle"] is None
        sides = report["bipartition"]
        assert sorted(sides["left"] + sides["right"]) == [0, 1, 2, 3]

    def test_unbalanced_graph_exits_one_with_a_circle(self, capsys, c5_one_negative):
        code, report = run_json(capsys, ["balance", c5_one_negative, "--json"])
        assert code == EXIT_FAILS
        assert report["balanced"] is False
        assert len(report["negative_circle"]) == 5

    def test_plain_text_output(self, capsys, c5_one_negative):
        assert main(["balance", c5_one_negative]) == EXIT_FAILS
        out = capsys.readouterr().out
        assert "unbalanced" in out


class TestMembershipCommands:
    def test_negation_check_accepts(self, c5_one_negative):
        assert main(["negation-check", c5_one_negative, "--edges", "2-3"]) == EXIT_HOLDS

    def test_negation_check_rejects(self, c5_one_negative):
        assert main(["negation-check", c5_one_negative, "--edges", "0-1,1-2"]) == EXIT_FAILS

    def test_minimal(self, c5_one_negative):
        assert main(["minimal", c5_one_negative, "--edges", "0-1"]) == EXIT_HOLDS

    def test_minimal_defaults_to_negative_edges(self, capsys, write_sg):
        path = write_sg(cycle_graph(5, NEG))
        assert main(["minimal", path]) == EXIT_FAILS
        assert "not minimal" in capsys.readouterr().out

    def test_edge_argument_naming_a_non_edge_is_usage_error(self, c5_one_negative):
        assert main(["negation-check", c5_one_negative, "--edges", "0-2"]) == EXIT_USAGE

    def test_malformed_edge_list_is_usage_error(self, c5_one_negative):
        assert main(["negation-check", c5_one_negative, "--edges", "zap"]) == EXIT_USAGE


class TestCertificateCommands:
    def test_certify_minimum_on_a_complete_graph(self, capsys, write_sg):
        path = write_sg(complete_graph(6).negate_edges([(0, 1), (2, 3)]))
        code, report = run_json(
            capsys, ["certify-minimum", path, "--edges", "0-1,2-3", "--json"]
        )
        assert code == EXIT_HOLDS
        assert len(report["certificate"]) == 2

    def test_certify_minimum_inconclusive(self, write_sg):
        g = complete_graph(5).negate_edges([(0, 1), (0, 2), (0, 3), (0, 4)])
        assert main(["certify-minimum", write_sg(g)]) == EXIT_FAILS  # defaults to E-

    def test_certify_minimum_needs_a_complete_graph(self, c5_one_negative):
        assert main(["certify-minimum", c5_one_negative]) == EXIT_PRECONDITION

    def test_certify_unique(self, write_sg):
        path = write_sg(complete_graph(6).negate_edges([(0, 1), (2, 3)]))
        assert main(["certify-unique", path]) == EXIT_HOLDS
        path7 = write_sg(complete_graph(7).negate_edges([(0, 1), (2, 3), (4, 5)]))
        assert main(["certify-unique", path7]) == EXIT_FAILS


class TestAcyclicCommand:
    def test_reports_forest_and_switching(self, capsys, c5_one_negative):
        code, report = run_json(capsys, ["acyclic", c5_one_negative, "--json"])
        assert code == EXIT_HOLDS
        assert report["negation_set"] == [[0, 1]]
        assert report["switching"] == []

    def test_trace_entries_in_json(self, capsys, write_sg):
        g = SignedGraph(8, [
            (0, 1, NEG), (1, 2, NEG), (2, 3, NEG), (0, 3, NEG), (4, 5, NEG), (6, 7, NEG),
            (0, 4, POS), (0, 5, POS), (1, 4, POS), (1, 5, POS),
            (2, 6, POS), (2, 7, POS), (3, 6, POS), (3, 7, POS),
            (4, 6, POS), (5, 7, POS),
        ])
        code, report = run_json(capsys, ["acyclic", write_sg(g), "--trace", "--json"])
        assert code == EXIT_HOLDS
        assert report["trace"]
        assert {"phase", "label", "switched"} <= set(report["trace"][0])

    def test_all_negative_k5_exit_code(self, capsys, write_sg):
        path = write_sg(complete_graph(5, NEG))
        assert main(["acyclic", path]) == EXIT_MINUS_K5
        assert "K5" in capsys.readouterr().err

    def test_degree_five_core_is_a_precondition_error(self, write_sg):
        assert main(["acyclic", write_sg(complete_graph(6))]) == EXIT_PRECONDITION


class TestPackingCommand:
    def test_single_component_report(self, capsys, c5_one_negative):
        code, report = run_json(capsys, ["packing", c5_one_negative, "--json"])
        assert code == EXIT_HOLDS
        (comp,) = report["components"]
        assert comp["packing_number"] == 5
        assert comp["distance"] == 4
        assert len(comp["family"]) == 5

    def test_component_sections_for_disconnected_input(self, capsys, write_sg):
        g = SignedGraph(8, [
            (0, 1, NEG), (1, 2, POS), (0, 2, POS),
            (3, 4, NEG), (4, 5, POS), (5, 6, POS), (6, 7, POS), (3, 7, POS),
        ])
        code, report = run_json(capsys, ["packing", write_sg(g), "--json"])
        assert code == EXIT_HOLDS
        assert len(report["components"]) == 2
        by_vertices = {tuple(c["vertices"]): c for c in report["components"]}
        assert by_vertices[(0, 1, 2)]["packing_number"] == 3
        assert by_vertices[(3, 4, 5, 6, 7)]["packing_number"] == 5
        # family members are lifted back to host vertex ids
        host_edges = {
            tuple(e) for c in report["components"] for mem in c["family"] for e in mem
        }
        assert (3, 4) in host_edges

    def test_mixed_bipartition_instance_reports_null_witness(self, capsys, write_sg):
        g = SignedGraph(6, [
            (0, 1, NEG), (1, 2, POS), (2, 3, NEG),
            (3, 4, POS), (4, 5, POS), (0, 5, NEG),
        ])
        code, report = run_json(capsys, ["packing", write_sg(g), "--json"])
        assert code == EXIT_HOLDS
        (comp,) = report["components"]
        assert comp["packing_number"] == 4
        assert comp["bipartition"] is None
        assert comp["distance"] is None

    def test_balanced_input_is_a_precondition_error(self, write_sg):
        path = write_sg(cycle_graph(4).negate_edges([(0, 1), (1, 2)]))
        assert main(["packing", path]) == EXIT_PRECONDITION


class TestFrustrationCommand:
    def test_totals_components(self, capsys, write_sg):
        g = SignedGraph(6, [
            (0, 1, NEG), (1, 2, NEG), (0, 2, NEG),
            (3, 4, NEG), (4, 5, NEG), (3, 5, NEG),
        ])
        code, report = run_json(capsys, ["frustration", write_sg(g), "--json"])
        assert code == EXIT_HOLDS
        assert report["total"] == 2
        assert [c["frustration_index"] for c in report["components"]] == [1, 1]

    def test_cap_applies(self, capsys, write_sg):
        path = write_sg(cycle_graph(6).negate_edges([(0, 1)]))
        assert main(["frustration", path, "--max-n", "5"]) == EXIT_PRECONDITION


class TestOracleVerifyCommand:
    def test_passes_on_a_small_graph(self, capsys, c5_one_negative):
        assert main(["oracle-verify", c5_one_negative, "--seed", "3"]) == EXIT_HOLDS
        out = capsys.readouterr().out
        assert "OK" in out
        assert "fail" not in out

    def test_large_graphs_skip_enumeration_checks(self, capsys, write_sg):
        path = write_sg(cycle_graph(6).negate_edges([(0, 1)]))
        assert main(["oracle-verify", path, "--max-n", "5"]) == EXIT_HOLDS
        assert "skip" in capsys.readouterr().out

    def test_json_report(self, capsys, c5_one_negative):
        code, report = run_json(capsys, ["oracle-verify", c5_one_negative, "--json"])
        assert code == EXIT_HOLDS
        assert all(c["outcome"] in {"pass", "skip"} for c in report["checks"])


class TestExportDot:
    def test_sign_styles(self, capsys, c5_one_negative):
        assert main(["export-dot", c5_one_negative]) == EXIT_HOLDS
        out = capsys.readouterr().out
        assert "0 -- 1 [style=dashed, color=red]" in out
        assert "1 -- 2 [style=solid]" in out

    def test_packing_families_get_distinct_colors(self, capsys, c5_one_negative):
        assert main(["export-dot", c5_one_negative, "--packing"]) == EXIT_HOLDS
        out = capsys.readouterr().out
        colors = {
            part.split("color=")[1].split("]")[0].split(",")[0]
            for part in out.splitlines()
            if "color=" in part
        }
        assert len(colors) == 5

    def test_edge_highlight(self, capsys, c5_one_negative):
        assert main(["export-dot", c5_one_negative, "--edges", "2-3"]) == EXIT_HOLDS
        out = capsys.readouterr().out
        assert "2 -- 3 [style=solid, color=blue, penwidth=2]" in out

    def test_export_dot_function_is_reusable(self):
        g = cycle_graph(3).negate_edges([(0, 1)])
        text = export_dot(g, [frozenset({(1, 2)})])
        assert text.startswith("graph signed {")
        assert text.rstrip().endswith("}")


class TestErrorHandling:
    def test_missing_file(self, tmp_path):
        assert main(["balance", str(tmp_path / "absent.sg")]) == EXIT_USAGE

    def test_parse_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.sg"
        bad.write_text("p sg 3 1\ne 0 9 +\n")
        assert main(["balance", str(bad)]) == EXIT_USAGE
        assert "line 2" in capsys.readouterr().err

    def test_no_command(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_output_file(self, capsys, tmp_path, c5_one_negative):
        target = tmp_path / "report.json"
        code = main(["balance", c5_one_negative, "--json", "--output", str(target)])
        assert code == EXIT_FAILS
        report = json.loads(target.read_text())
        assert report["balanced"] is False

    def test_json_reports_are_deterministic(self, capsys, c5_one_negative):
        _, first = run_json(capsys, ["packing", c5_one_negative, "--json"])
        _, second = run_json(capsys, ["packing", c5_one_negative, "--json"])
        assert first == second
