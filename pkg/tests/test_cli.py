import json

import pytest

from polyadc import cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def export(tmp_path, name, *params, form="adc"):
    out = tmp_path / ("%s-%s.json" % (name, form))
    argv = ["catalog", name]
    argv.extend(str(p) for p in params)
    argv.extend(["--form", form, "--out", str(out)])
    assert cli.main(argv) == 0
    return out


def test_usage_errors(capsys, tmp_path):
    code, _, err = run([], capsys)
    assert code == 1
    assert "usage error" in err

    code, _, err = run(["check"], capsys)
    assert code == 1
    assert "usage error" in err

    code, _, err = run(["oracle", str(tmp_path / "x.json")], capsys)
    assert code == 1  # --dim is required


def test_unreadable_file(capsys, tmp_path):
    code, _, err = run(["check", str(tmp_path / "absent.json")], capsys)
    assert code == 2
    assert "document error: cannot read" in err


def test_malformed_json(capsys, tmp_path):
    doc = tmp_path / "bad.json"
    doc.write_text("not json")
    code, _, err = run(["check", str(doc)], capsys)
    assert code == 2
    assert "document error: invalid JSON" in err


def test_semantically_broken_document(capsys, tmp_path):
    doc = tmp_path / "dup.json"
    doc.write_text(json.dumps({
        "kind": "adc",
        "generators": [
            {"name": "v", "dim": 0, "augmentation": 1},
            {"name": "v", "dim": 0, "augmentation": 1},
        ],
    }))
    code, _, err = run(["check", str(doc)], capsys)
    assert code == 3
    assert "validation error" in err
    assert "duplicate generator name 'v'" in err


def test_check_complex_document(capsys, tmp_path):
    doc = export(tmp_path, "oriental", 2)
    code, out, _ = run(["check", str(doc)], capsys)
    assert code == 0
    assert "unital: yes" in out
    assert "generating relation is a partial order: yes" in out
    assert "strong Steiner: yes" in out


def test_check_square_reports_failures(capsys, tmp_path):
    doc = export(tmp_path, "square", form="polygraph")
    code, out, _ = run(["check", str(doc)], capsys)
    assert code == 4
    assert "atomic: no" in out
    assert "atomicity violated at (alpha, 1): {f}" in out
    assert "codim-1 preorder antisymmetric: no" in out
    assert "algebraically loop-free: yes" in out
    assert "orderable: no" in out
    assert "constraint cycle: f -> f" in out
    assert "strong Steiner: no" in out


def test_check_json_verdicts(capsys, tmp_path):
    doc = export(tmp_path, "square", form="polygraph")
    code, out, _ = run(["check", "--json", str(doc)], capsys)
    assert code == 4
    verdict = json.loads(out)
    assert verdict["atomic"] is False
    assert verdict["atomic_witness"] == ["alpha", 1, ["f"]]
    assert verdict["codim1_cycle"] == ["alpha", "f"]
    assert verdict["steiner_cycle"] == ["f"]
    assert verdict["strongly_loop_free_algebraic"] is True
    assert verdict["strong_steiner"] is False

    doc = export(tmp_path, "oriental", 2, form="polygraph")
    code, out, _ = run(["check", "--json", str(doc)], capsys)
    assert code == 0
    verdict = json.loads(out)
    assert verdict["strong_steiner"] is True
    assert verdict["steiner_order"] == ["0", "1", "2", "02", "01", "12", "012"]
    assert verdict["atomic_witness"] is None


def test_enumerate_counts(capsys, tmp_path):
    doc = export(tmp_path, "oriental", 2)
    code, out, _ = run(["enumerate", str(doc)], capsys)
    assert code == 0
    assert "dim 0: 3 cells, 3 nontrivial" in out
    assert "dim 2: 8 cells, 1 nontrivial" in out
    assert "total: 18" in out

    code, out, _ = run(["enumerate", "--json", str(doc)], capsys)
    assert code == 0
    assert json.loads(out) == {
        "counts": {
            "0": {"cells": 3, "nontrivial": 3},
            "1": {"cells": 7, "nontrivial": 4},
            "2": {"cells": 8, "nontrivial": 1},
        },
        "max_dim": 2,
        "total": 18,
    }


def test_enumerate_error_paths(capsys, tmp_path):
    doc = export(tmp_path, "endo2cell", form="polygraph")
    code, _, err = run(["enumerate", str(doc)], capsys)
    assert code == 3
    assert "not unital enough to enumerate" in err

    doc = export(tmp_path, "loop", form="polygraph")
    code, _, err = run(["enumerate", str(doc)], capsys)
    assert code == 5
    assert "resource error [ENUM_CAP]" in err

    code, out, _ = run(["enumerate", "--max-dim", "0", str(doc)], capsys)
    assert code == 0
    assert "dim 0: 2 cells, 2 nontrivial" in out


def test_lambda_matches_catalog_export(capsys, tmp_path):
    adc_doc = export(tmp_path, "oriental", 2)
    pres_doc = export(tmp_path, "oriental", 2, form="polygraph")
    out = tmp_path / "lam.json"
    code, _, _ = run(["lambda", "--out", str(out), str(pres_doc)], capsys)
    assert code == 0
    assert out.read_text() == adc_doc.read_text()

    # a complex document passes through unchanged
    code, text, _ = run(["lambda", str(adc_doc)], capsys)
    assert code == 0
    assert json.loads(text) == json.loads(adc_doc.read_text())


def test_preorder_summary_and_dot(capsys, tmp_path):
    doc = export(tmp_path, "oriental", 2, form="polygraph")
    dot = tmp_path / "rel.dot"
    code, out, _ = run(["preorder", "--dot", str(dot), str(doc)], capsys)
    assert code == 0
    assert "nodes: 7, edges: 11" in out
    assert "antisymmetric: yes" in out
    text = dot.read_text()
    assert text.startswith("digraph relation {")
    assert '"0" -> "01";' in text

    doc = export(tmp_path, "loop", form="polygraph")
    code, out, _ = run(["preorder", "--json", str(doc)], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["antisymmetric"] is False
    assert payload["nodes"] == ["a", "b", "f", "g"]
    assert set(payload["cycle"]) == {"a", "b", "f", "g"}
    assert ["f", "b"] in payload["edges"]


def test_roundtrip_outcomes(capsys, tmp_path):
    doc = export(tmp_path, "oriental", 2)
    code, out, _ = run(["roundtrip", str(doc)], capsys)
    assert code == 0
    assert "dim 1: 7 cells, rank 3" in out
    assert "roundtrip: ok (atoms form a basis and recover the complex)" in out

    doc = export(tmp_path, "loop", form="polygraph")
    code, out, _ = run(["roundtrip", str(doc)], capsys)
    assert code == 4
    assert "roundtrip: failed (not a strong Steiner complex)" in out

    doc = export(tmp_path, "oriental", 3)
    code, _, err = run(["roundtrip", "--max-cells", "10", str(doc)], capsys)
    assert code == 5
    assert "more than 10 cells" in err


def test_oracle_counts(capsys, tmp_path):
    doc = export(tmp_path, "oriental", 2)
    code, out, _ = run(["oracle", "--dim", "1", "--cap", "2", str(doc)], capsys)
    assert code == 0
    assert "dim 1 with coefficients up to 2: 7 cells, 4 nontrivial" in out

    code, out, _ = run(
        ["oracle", "--dim", "1", "--cap", "2", "--json", str(doc)], capsys)
    assert code == 0
    assert json.loads(out) == {"dim": 1, "cap": 2, "cells": 7, "nontrivial": 4}


def test_catalog_errors(capsys):
    code, _, err = run(["catalog", "gizmo"], capsys)
    assert code == 1
    assert "unknown catalog entry 'gizmo'" in err
    assert "oriental" in err  # the known names are listed

    code, _, err = run(["catalog", "oriental"], capsys)
    assert code == 1
    assert "takes 1 parameter(s), got 0" in err

    code, _, err = run(["catalog", "oriental", "4", "--form", "polygraph"], capsys)
    assert code == 1
    assert "has no polygraph form" in err

    code, _, err = run(["catalog", "oriental", "x"], capsys)
    assert code == 1
    assert "usage error" in err
