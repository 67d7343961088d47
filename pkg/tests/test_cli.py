import io
import json
import subprocess
import sys

import pytest

from symmetry_atlas import families as fam
from symmetry_atlas.classifier import THEOREM_MIN_LENGTH
from symmetry_atlas.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from symmetry_atlas.expansions import clique_expansion
from symmetry_atlas.graph import complete, cycle, disjoint_union, path
from symmetry_atlas.graph6 import emit_graph6, parse_graph6
from symmetry_atlas.symmetry import is_isomorphic

PETERSEN = emit_graph6(fam.petersen())
CUBE = emit_graph6(fam.cube())


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestClassify:
    def test_petersen(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["classify", PETERSEN])
        assert code == EXIT_OK
        (rec,) = json.loads(out)["records"]
        assert "mainthm/2" in [b["branch"] for b in rec["branches"]]
        assert rec["failures"] == []

    def test_k4(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["classify", "C~"])
        (rec,) = json.loads(out)["records"]
        assert code == EXIT_OK
        assert rec["flags"]["vertex_transitive"]
        assert "quasi-4-connected" in rec["tiers"]
        assert any("small exceptional" in n for n in rec["notes"])

    def test_empty_input(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["classify"], stdin="")
        assert code == EXIT_OK
        assert json.loads(out) == {"schema": 1, "records": []}

    def test_stdin_and_text(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["classify", "--format", "text"], stdin=PETERSEN + "\n" + CUBE + "\n")
        lines = [ln for ln in out.splitlines() if not ln.startswith("  ")]
        assert code == EXIT_OK and len(lines) == 2
        assert lines[0].split("\t")[3] == "maincor/mainthm"

    def test_malformed_line(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["classify", PETERSEN, "C~~"])
        recs = json.loads(out)["records"]
        assert code == EXIT_USAGE
        assert "error" in recs[1] and "branches" in recs[0]

    def test_disconnected(self, capsys, monkeypatch):
        word = emit_graph6(disjoint_union(cycle(3), cycle(3)))
        code, out, _ = run(capsys, monkeypatch, ["classify", word])
        assert code == EXIT_USAGE
        assert json.loads(out)["records"][0]["error"] == "graph is not connected"

    def test_file(self, capsys, monkeypatch, tmp_path):
        p = tmp_path / "in.g6"
        p.write_text(CUBE + "\n\n" + PETERSEN + "\n")
        code, out, _ = run(capsys, monkeypatch, ["classify", "--file", str(p), "--json"])
        assert code == EXIT_OK and len(json.loads(out)["records"]) == 2

    def test_parallel_is_deterministic(self, capsys, monkeypatch):
        words = [PETERSEN, CUBE, emit_graph6(path(4)), emit_graph6(fam.line_graph_cube()), "C~"]
        _, serial, _ = run(capsys, monkeypatch, ["classify"] + words)
        _, parallel, _ = run(capsys, monkeypatch, ["classify", "--parallel", "3"] + words)
        assert serial == parallel

    def test_seed_is_ignored(self, capsys, monkeypatch):
        _, a, _ = run(capsys, monkeypatch, ["classify", PETERSEN])
        monkeypatch.setenv("SYMMETRY_ATLAS_SEED", "12345")
        _, b, _ = run(capsys, monkeypatch, ["classify", PETERSEN])
        assert a == b

    def test_conflicting_formats(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["classify", "--json", "--format", "text", PETERSEN])
        assert code == EXIT_USAGE


class TestGenerate:
    def test_octahedron(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["generate", fam.K22_BAGS, "3"])
        assert code == EXIT_OK
        assert is_isomorphic(parse_graph6(out.strip()), fam.octahedron()) is not None

    def test_c4_bags_all(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["generate", fam.C4_BAGS, "4", "--all"])
        graphs = [parse_graph6(w) for w in out.split()]
        assert code == EXIT_OK and len(graphs) == 2
        assert any(is_isomorphic(g, fam.cube()) is not None for g in graphs)
        assert any(is_isomorphic(g, fam.moebius(4)) is not None for g in graphs)

    def test_expand_regularity_mismatch(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["generate", fam.K4_BAGS, "5", "--expand", "K4"])
        assert code == EXIT_USAGE and "4-regular" in err

    def test_expand_c4(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["generate", fam.K22_BAGS, "3", "--expand", "C4"])
        assert code == EXIT_OK and len(out.split()) == 2

    def test_infeasible(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["generate", fam.ALT_K4_C4, "5"])
        assert code == EXIT_USAGE

    def test_bad_index(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["generate", fam.K4_BAGS, "5", "3"])
        assert code == EXIT_USAGE

    def test_unknown_family(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["generate", "nope", "5"])
        assert code == EXIT_USAGE

    def test_dot(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["generate", fam.K4_BAGS, "4", "--format", "dot"])
        assert code == EXIT_OK and out.startswith("graph G0 {")

    @pytest.mark.parametrize("family", fam.FAMILIES)
    def test_round_trip_through_classify(self, capsys, monkeypatch, family):
        length = max(THEOREM_MIN_LENGTH[family], 6)
        _, words, _ = run(capsys, monkeypatch, ["generate", family, str(length), "--all"])
        code, out, _ = run(capsys, monkeypatch, ["classify"], stdin=words)
        assert code == EXIT_OK
        for rec in json.loads(out)["records"]:
            fams = {b["witness"].get("family") for b in rec["branches"] if b["theorem"] == "mainthm"}
            assert family in fams


class TestVerify:
    def test_godsil(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["verify", "godsil", "builtin"])
        rep = json.loads(out)["reports"][0]
        assert code == EXIT_OK and rep["suite"] == "godsil" and rep["checked"] > 50

    def test_either_order(self, capsys, monkeypatch):
        _, a, _ = run(capsys, monkeypatch, ["verify", "godsil", "builtin"])
        _, b, _ = run(capsys, monkeypatch, ["verify", "builtin", "godsil"])
        assert a == b

    def test_lq3_count(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["verify", "c4-expansion-count-lq3", "--format", "text"])
        assert code == EXIT_OK and "count=3" in out

    def test_known_failure_exits_1(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["verify", "triangle-bags-not-arc-transitive", "--format", "text"])
        assert code == EXIT_FAIL
        assert "octahedron" in out

    def test_unknown_suite(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["verify", "no-such-suite"])
        assert code == EXIT_USAGE

    def test_corpus_file(self, capsys, monkeypatch, tmp_path):
        p = tmp_path / "c.g6"
        p.write_text("\n".join([PETERSEN, CUBE, emit_graph6(cycle(5))]) + "\n")
        code, out, _ = run(capsys, monkeypatch, ["verify", "characterization", str(p)])
        rep = json.loads(out)["reports"][0]
        assert code == EXIT_OK and rep["checked"] == 3

    def test_malformed_corpus_file(self, capsys, monkeypatch, tmp_path):
        p = tmp_path / "c.g6"
        p.write_text(PETERSEN + "\nC~~\n")
        code, _, err = run(capsys, monkeypatch, ["verify", "godsil", str(p)])
        assert code == EXIT_USAGE and ":2:" in err


class TestTransform:
    def test_linegraph(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["transform", "linegraph", CUBE])
        assert code == EXIT_OK and parse_graph6(out.strip()).n == 12

    def test_clique_expand_and_contract(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["transform", "clique-expand", PETERSEN])
        x = parse_graph6(out.strip())
        assert x.n == 30
        code, back, _ = run(capsys, monkeypatch, ["transform", "contract", "--pattern", "K3"], stdin=out)
        assert code == EXIT_OK
        assert is_isomorphic(parse_graph6(back.strip()), fam.petersen()) is not None

    def test_contract_partition(self, capsys, monkeypatch):
        blocks = json.dumps([[0, 1], [2, 3], [4, 5]])
        code, out, _ = run(capsys, monkeypatch,
                           ["transform", "contract", "--partition", blocks, emit_graph6(cycle(6))])
        assert code == EXIT_OK
        assert is_isomorphic(parse_graph6(out.strip()), cycle(3)) is not None

    def test_contract_needs_a_pattern(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["transform", "contract", CUBE])
        assert code == EXIT_USAGE

    def test_no_partition(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["transform", "contract", "--pattern", "K3", CUBE])
        assert code == EXIT_USAGE

    def test_bad_partition(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["transform", "contract", "--partition", "[[0", CUBE])
        assert code == EXIT_USAGE

    def test_two_inputs(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["transform", "linegraph", CUBE, PETERSEN])
        assert code == EXIT_USAGE

    def test_malformed(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["transform", "linegraph", "C~~"])
        assert code == EXIT_USAGE

    def test_too_large_for_graph6(self, capsys, monkeypatch):
        word = emit_graph6(clique_expansion(fam.petersen()))
        code, _, _ = run(capsys, monkeypatch, ["transform", "clique-expand", word])
        assert code == EXIT_USAGE


class TestAut:
    def test_cube(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["aut", "--json", CUBE])
        (rec,) = json.loads(out)["records"]
        assert code == EXIT_OK and rec["order"] == 48
        assert rec["vertex_transitive"] and rec["edge_transitive"] and rec["arc_transitive"]

    def test_prism(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["aut", "--json", emit_graph6(fam.k3_box_k2())])
        (rec,) = json.loads(out)["records"]
        assert rec["vertex_transitive"] and not rec["edge_transitive"]

    def test_path_text(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["aut", emit_graph6(path(3))])
        assert code == EXIT_OK and "vertex-orbits=2" in out

    def test_malformed(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["aut", "C~~"])
        assert code == EXIT_USAGE and "error" in out


class TestCorpus:
    def test_transitive_only(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["corpus", "--max-n", "10", "--transitive-only", "--format", "text"])
        names = [ln.split("\t")[0] for ln in out.splitlines()]
        assert code == EXIT_OK and "petersen" in names and "P3" not in names

    def test_graph6(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["corpus", "--max-n", "8"])
        assert all(parse_graph6(w).n <= 8 for w in out.split())


class TestEntryPoints:
    def test_no_command(self, capsys, monkeypatch):
        assert run(capsys, monkeypatch, [])[0] == EXIT_USAGE

    def test_help(self, capsys, monkeypatch):
        assert run(capsys, monkeypatch, ["--help"])[0] == EXIT_OK

    def test_module(self):
        proc = subprocess.run([sys.executable, "-m", "symmetry_atlas", "aut", "--json", emit_graph6(complete(5))],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["records"][0]["order"] == 120
