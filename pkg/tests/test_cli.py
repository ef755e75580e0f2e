import json

import pytest

from homflytop.cli import main
from homflytop.fixtures import k32_three_strand, single_edge


@pytest.fixture()
def k32_path(tmp_path):
    g, _ = k32_three_strand()
    path = tmp_path / "k32.json"
    path.write_text(json.dumps(g.to_document(r0_dart=(0, 1), kappa=0)))
    return str(path)


@pytest.fixture()
def single_path(tmp_path):
    g, _ = single_edge()
    path = tmp_path / "single.json"
    path.write_text(json.dumps(g.to_document(r0_dart=(0, 1), kappa=0)))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCommands:
    def test_faces(self, capsys, k32_path):
        code, out, _ = run(capsys, "faces", "--input", k32_path, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["faces"]) == 3

    def test_dual(self, capsys, k32_path):
        code, out, _ = run(capsys, "dual", "--input", k32_path, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["strongly_connected"] is True
        assert len(payload["edges"]) == 6

    def test_arbtree(self, capsys, k32_path):
        code, out, _ = run(capsys, "arbtree", "--input", k32_path, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        types = [leaf["type"] for leaf in payload["leaves"]]
        assert types.count("I") == 3
        assert payload["clocked"] == [1, 3]

    def test_arbtree_dot(self, capsys, k32_path):
        code, out, _ = run(capsys, "arbtree", "--input", k32_path, "--format", "dot")
        assert code == 0
        assert out.startswith("digraph")

    def test_triangulate(self, capsys, k32_path):
        code, out, _ = run(
            capsys, "triangulate", "--input", k32_path, "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["attach_counts"] == [0, 1, 1]

    def test_hvector(self, capsys, k32_path):
        code, out, _ = run(
            capsys, "hvector", "--input", k32_path, "--format", "json", "--all-roots"
        )
        assert code == 0
        payload = json.loads(out)
        assert {r["h"] for r in payload["results"]} == {"2*x^3 + 1*x^4"}

    def test_parking(self, capsys, k32_path):
        code, out, _ = run(
            capsys, "parking", "--input", k32_path, "--format", "json", "--all-roots"
        )
        assert code == 0
        payload = json.loads(out)
        assert {r["p"] for r in payload["results"]} == {"1 + 2*u^1"}

    def test_parking_csv(self, capsys, k32_path):
        code, out, _ = run(capsys, "parking", "--input", k32_path, "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "r0,exponent,coefficient"
        assert len(lines) == 3

    def test_top(self, capsys, k32_path):
        code, out, _ = run(capsys, "top", "--input", k32_path, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["top"] == "1*v^2 + 2*v^4"
        assert payload["oracle"] == "1*v^2 + 2*v^4"

    def test_homfly(self, capsys, k32_path):
        code, out, _ = run(capsys, "homfly", "--input", k32_path, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 6 and payload["s"] == 5
        assert payload["conway"] == "3*z^2"

    def test_homogeneous(self, capsys, k32_path):
        code, out, _ = run(
            capsys, "homogeneous", "--input", k32_path, "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["top"] == payload["oracle"] == "1*v^2 + 2*v^4"

    def test_homogeneous_with_negative_signs(self, capsys, tmp_path):
        g, _ = k32_three_strand()
        doc = g.to_document(r0_dart=(0, 1), kappa=0)
        doc["signs"] = [-1] * 6
        path = tmp_path / "k32neg.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(
            capsys, "homogeneous", "--input", str(path), "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["top"] == payload["oracle"] == "2*v^-4 + 1*v^-2"
        assert payload["writhe"] == -6

    def test_homogeneous_bad_signs_rejected(self, capsys, tmp_path):
        g, _ = k32_three_strand()
        doc = g.to_document(r0_dart=(0, 1), kappa=0)
        doc["signs"] = [1, -1]
        path = tmp_path / "bad_signs.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "homogeneous", "--input", str(path))
        assert code == 2

    def test_verify_passes(self, capsys, k32_path):
        code, out, _ = run(capsys, "verify", "--input", k32_path, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert payload["summary"]["top"] == "1*v^2 + 2*v^4"

    def test_verify_single(self, capsys, single_path):
        code, out, _ = run(capsys, "verify", "--input", single_path)
        assert code == 0
        assert out.strip().endswith("PASS")

    def test_root_override(self, capsys, k32_path):
        code, out, _ = run(
            capsys, "top", "--input", k32_path, "--kappa", "3", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["top"] == "1*v^2 + 2*v^4"

    def test_r0_override_without_kappa(self, capsys, k32_path):
        code, out, _ = run(
            capsys, "top", "--input", k32_path, "--r0", "2,ve", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["top"] == "1*v^2 + 2*v^4"


class TestGen:
    def test_deterministic(self, capsys):
        code1, out1, _ = run(capsys, "gen", "--seed", "3", "--count", "5")
        code2, out2, _ = run(capsys, "gen", "--seed", "3", "--count", "5")
        assert code1 == code2 == 0
        assert out1 == out2
        docs = [json.loads(line) for line in out1.strip().splitlines()]
        assert len(docs) == 5

    def test_seed_changes_output(self, capsys):
        _, out1, _ = run(capsys, "gen", "--seed", "3", "--count", "5")
        _, out2, _ = run(capsys, "gen", "--seed", "4", "--count", "5")
        assert out1 != out2

    def test_generated_graphs_verify(self, capsys, tmp_path):
        _, out, _ = run(
            capsys, "gen", "--seed", "11", "--count", "3", "--max-edges", "6"
        )
        for i, line in enumerate(out.strip().splitlines()):
            path = tmp_path / f"g{i}.json"
            path.write_text(line)
            code, _, _ = run(capsys, "verify", "--input", str(path))
            assert code == 0


class TestErrors:
    def test_missing_input(self, capsys):
        code, _, err = run(capsys, "verify")
        assert code == 2
        assert json.loads(err)["error"] == "input"

    def test_bad_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "verify", "--input", str(path))
        assert code == 2

    def test_bad_kappa(self, capsys, k32_path):
        code, _, err = run(capsys, "top", "--input", k32_path, "--kappa", "99")
        assert code == 2

    def test_bad_r0_flag(self, capsys, k32_path):
        code, _, err = run(capsys, "top", "--input", k32_path, "--r0", "nonsense")
        assert code == 2

    def test_cap_exceeded(self, capsys, k32_path):
        code, _, err = run(capsys, "homfly", "--input", k32_path, "--cap", "3")
        assert code == 2
        assert json.loads(err)["error"] == "input"
