import json
from pathlib import Path

import pytest

from adjcert.cli import load_example, main

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("name,code,statement", [
    ("quadruple-2-19", 0, "at least one g(Sigma_i) >= 2"),
    ("single-surface-d4", 0, "g(Sigma) >= 3"),
    ("strle-thom-d4", 0, "g(Sigma) >= 3"),
])
def test_examples(name, code, statement, tmp_path):
    out = tmp_path / "cert.json"
    assert main(["example", name, "--out", str(out)]) == code
    assert json.loads(out.read_text())["conclusion"]["statement"] == statement


def test_text_format(capsys):
    assert main(["example", "quadruple-2-19", "--format", "text"]) == 0
    text = capsys.readouterr().out
    assert "status:  certified" in text
    assert "conclusion: at least one g(Sigma_i) >= 2" in text


def test_check_file_and_emit_svg(tmp_path):
    data = json.loads(load_example("quadruple-2-19"))
    svg = tmp_path / "pic.svg"
    data["options"] = {"emit_svg": str(svg)}
    req = tmp_path / "req.json"
    req.write_text(json.dumps(data))
    assert main(["check", str(req), "--out", str(tmp_path / "c.json")]) == 0
    assert svg.read_text() == (GOLDEN / "quadruple_2_19.svg").read_text()


def test_svg_command(tmp_path):
    req = tmp_path / "req.json"
    req.write_text(load_example("quadruple-2-19"))
    out = tmp_path / "q.svg"
    assert main(["svg", str(req), "--out", str(out)]) == 0
    assert out.read_text() == (GOLDEN / "quadruple_2_19.svg").read_text()


def test_plot_option(tmp_path):
    png = tmp_path / "q.png"
    assert main(["example", "quadruple-2-19", "--out", str(tmp_path / "c.json"),
                 "--plot", str(png)]) == 0
    assert png.read_bytes()[:4] == b"\x89PNG"


def test_hypothesis_failure_exit(tmp_path):
    data = json.loads(load_example("quadruple-2-19"))
    data["mode"] = "general"
    data["surfaces"] = data["surfaces"][:2]
    data["disjoint_pairs"] = [["Sigma_1", "Sigma_2"]]
    req = tmp_path / "req.json"
    req.write_text(json.dumps(data))
    assert main(["check", str(req), "--out", str(tmp_path / "c.json")]) == 3


def test_inconclusive_exit(tmp_path):
    data = json.loads(load_example("quadruple-2-19"))
    data["mode"] = "general"
    data["surfaces"] = data["surfaces"][:3]
    data["disjoint_pairs"] = [["Sigma_1", "Sigma_2"], ["Sigma_2", "Sigma_3"]]
    req = tmp_path / "req.json"
    req.write_text(json.dumps(data))
    out = tmp_path / "c.json"
    assert main(["check", str(req), "--out", str(out)]) == 2
    assert "recession cone nontrivial" in " ".join(json.loads(out.read_text())["inconclusive_reasons"])


def test_usage_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": 1}')
    assert main(["check", str(bad)]) == 1
    assert "error: $" in capsys.readouterr().err
    assert main(["check", str(tmp_path / "missing.json")]) == 1
    assert main(["frobnicate"]) == 1
    assert main(["example", "nope"]) == 1


def test_search_command(tmp_path):
    spec = tmp_path / "s.json"
    spec.write_text(json.dumps({"schema": 1, "manifold": {"m": 2, "n": 2},
                                "characteristic": {"h": [1, 1], "e": [-3, -3]},
                                "coefficient_bound": 1, "limit": 5}))
    out = tmp_path / "hits.json"
    assert main(["search", str(spec), "--out", str(out)]) == 0
    res = json.loads(out.read_text())
    assert res["count"] == len(res["candidates"])
    spec.write_text(json.dumps({"schema": 1, "manifold": {"m": 2, "n": 2},
                                "characteristic": {"h": [1, 1], "e": [-1, -1]},
                                "coefficient_bound": 9}))
    assert main(["search", str(spec)]) == 1
