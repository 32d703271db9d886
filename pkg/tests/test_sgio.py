""".sg format: parse/serialize round trips and diagnostics with line numbers."""

from __future__ import annotations

import io

import pytest
from hypothesis import given

from negset import NEG, POS, SgParseError, SignedGraph, dump, load, load_path, parse, serialize
from negset.graph import cycle_graph

from conftest import connected_signed_graphs


SAMPLE = """\
c a triangle with one negative edge
p sg 3 3
e 0 1 +
e 1 2 -
e 0 2 +
"""


class TestParse:
    def test_sample(self):
        g = parse(SAMPLE)
        assert g.n == 3
        assert g.negative_edges() == frozenset({(1, 2)})

    def test_blank_lines_and_comments_are_skipped(self):
        g = parse("c heading\n\np sg 2 1\nc mid\ne 0 1 -\n\n")
        assert g.edge_count == 1

    def test_edgeless_graph(self):
        assert parse("p sg 4 0\n").n == 4

    @pytest.mark.parametrize(
        "text, fragment, line",
        [
            ("e 0 1 +\n", "before header", 1),
            ("p sg 3 1\np sg 3 1\n", "duplicate header", 2),
            ("p sg x 1\n", "integers", 1),
            ("p sg 3 -1\n", "nonnegative", 1),
            ("p graph 3 1\n", "p sg", 1),
            ("p sg 3 1\ne 0 1\n", "edge line", 2),
            ("p sg 3 1\ne 0 one +\n", "integers", 2),
            ("p sg 3 1\ne 0 1 ?\n", "sign", 2),
            ("p sg 3 1\ne 1 1 +\n", "loop", 2),
            ("p sg 3 1\ne 1 0 +\n", "0 <= u < v", 2),
            ("p sg 3 1\ne 0 9 +\n", "0 <= u < v", 2),
            ("p sg 3 2\ne 0 1 +\ne 0 1 -\n", "duplicate edge", 3),
            ("p sg 3 1\nq 0 1 +\n", "unrecognized", 2),
        ],
    )
    def test_errors_carry_line_numbers(self, text, fragment, line):
        with pytest.raises(SgParseError, match=fragment) as exc:
            parse(text)
        assert exc.value.line == line

    def test_missing_header(self):
        with pytest.raises(SgParseError, match="missing"):
            parse("c nothing else\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(SgParseError, match="promised"):
            parse("p sg 3 2\ne 0 1 +\n")


class TestRoundTrip:
    @given(connected_signed_graphs(max_n=8))
    def test_parse_serialize_identity(self, g):
        assert parse(serialize(g)) == g

    @given(connected_signed_graphs(max_n=8))
    def test_serialize_is_canonical(self, g):
        text = serialize(g)
        assert serialize(parse(text)) == text

    def test_streams_and_paths(self, tmp_path):
        g = cycle_graph(5, NEG)
        buf = io.StringIO()
        dump(g, buf)
        assert load(io.StringIO(buf.getvalue())) == g
        p = tmp_path / "c5.sg"
        p.write_text(serialize(g))
        assert load_path(p) == g

    def test_serialized_header_matches_counts(self):
        g = SignedGraph(4, [(0, 3, POS), (1, 2, NEG)])
        lines = serialize(g).splitlines()
        assert lines[0] == "p sg 4 2"
        assert len([l for l in lines if l.startswith("e ")]) == 2
