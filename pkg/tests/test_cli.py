import json

import pytest

from main import main


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_info_json(capsys):
    code, out = _run(capsys, "info", "--quiver", "e6", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["h"] == 12
    assert report["exponents"] == [1, 4, 5, 7, 8, 11]
    assert report["degree_ranges"]["4"] == [-12, -4]


def test_info_text_and_latex(capsys):
    code, out = _run(capsys, "info", "--quiver", "d5")
    assert code == 0
    assert "h = 8" in out and "4->5" in out
    code, out = _run(capsys, "info", "--quiver", "d5", "--format", "latex")
    assert code == 0
    assert out.startswith("\\begin{tabular}")


def test_unsupported_quiver_is_a_usage_error(capsys):
    code, out = _run(capsys, "info", "--quiver", "a5")
    assert code == 2
    assert out == ""


def test_missing_quiver_flag():
    with pytest.raises(SystemExit) as excinfo:
        main(["info"])
    assert excinfo.value.code == 2


def test_no_command(capsys):
    assert main([]) == 2


def test_basis_and_hilbert(capsys, tmp_path):
    code, out = _run(capsys, "basis", "--quiver", "d4", "--format", "json", "--cache-dir", str(tmp_path))
    assert code == 0
    assert json.loads(out)["dimension"] == 28
    code, out = _run(capsys, "hilbert", "--quiver", "d4", "--cache-dir", str(tmp_path))
    assert code == 0
    assert "column 1" in out


def test_center_json(capsys, tmp_path):
    code, out = _run(capsys, "center", "--quiver", "e6", "--format", "json", "--cache-dir", str(tmp_path))
    assert code == 0
    report = json.loads(out)
    assert [g["name"] for g in report["generators"]] == ["z0", "z6", "z8", "w3", "w6"]


def test_e6_products_json(capsys, tmp_path):
    code, out = _run(capsys, "products", "--quiver", "e6", "--format", "json", "--cache-dir", str(tmp_path))
    assert code == 0
    report = json.loads(out)
    entry = next(p for p in report["products"] if p["left"] == "theta0" and p["right"] == "f1")
    assert entry["result"] == [{"name": "h1", "coeff": "-8/1"}, {"name": "h2", "coeff": "-4/1"}]
    assert report["m_alpha"] == [["-8/1", "-4/1"], ["-4/1", "-8/1"]]
    assert report["m_beta"] == [["0/1", "-6/1"], ["6/1", "0/1"]]


def test_hh_index_out_of_range(capsys):
    code, _ = _run(capsys, "hh", "--quiver", "d4", "--index", "9")
    assert code == 2


def test_negative_max_degree_is_a_usage_error(capsys):
    code, out = _run(capsys, "basis", "--quiver", "d4", "--max-degree", "-1")
    assert code == 2
    assert out == ""


def test_hh_filtered_by_index(capsys, tmp_path):
    code, out = _run(capsys, "hh", "--quiver", "d5", "--index", "2", "--format", "json",
                     "--cache-dir", str(tmp_path))
    assert code == 0
    report = json.loads(out)
    assert [e["name"] for e in report["named"]] == ["f4"]
    assert report["dimensions"]["2"] == {"-2": 1}


def test_verify_d4(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, out = _run(capsys, "verify", "--quiver", "d4", "--skip-slow", "--cache-dir", str(tmp_path),
                     "--report", str(report))
    assert code == 0
    assert "Verification Results" in out
    assert json.loads(report.read_text())["passed"] is True


def test_verify_partial_e8(capsys):
    code, out = _run(capsys, "verify", "--quiver", "e8", "--max-degree", "6", "--checks", "hilbert",
                     "--no-cache", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["partial"] is True
    assert [r["status"] for r in report["results"]] == ["pass"]


def test_verify_unknown_check(capsys):
    code, _ = _run(capsys, "verify", "--quiver", "d4", "--checks", "nonsense", "--no-cache")
    assert code == 2
