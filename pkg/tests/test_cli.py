import json

import pytest

from orbitbell.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solids_listing(capsys):
    code, out, _ = run(capsys, "solids")
    assert code == 0
    assert "tetrahedron" in out and "truncated_octahedron" in out
    lines = [l for l in out.splitlines() if l.startswith("tetrahedron")]
    assert " 4 " in lines[0] and "S4" in lines[0]


def test_bounds_command(capsys):
    code, out, _ = run(capsys, "--format", "structured", "bounds",
                       "cuboctahedron", "tetrahedron")
    assert code == 0
    rec = json.loads(out)
    assert rec["classical_bound"] == pytest.approx(13.0639, abs=5e-4)
    assert rec["quantum_value"] == pytest.approx(16.0)


def test_bounds_unknown_solid(capsys):
    code, _, err = run(capsys, "bounds", "nonagon", "cube")
    assert code == 2
    assert "unknown solid" in err


def test_table1_check_passes(capsys):
    code, out, _ = run(capsys, "--format", "structured", "table1", "--check")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 13
    for row in rows[:11]:
        assert row["delta_classical"] <= 5e-4


def test_classify_tetrahedron(capsys):
    code, out, _ = run(capsys, "classify", "tetrahedron")
    assert code == 0
    assert "N+=2" in out and "2.309401" in out


def test_classify_with_pair_marks_saturating_orbits(capsys):
    code, out, _ = run(capsys, "classify", "tetrahedron", "--pair", "octahedron")
    assert code == 0
    assert "saturating Alice vector" in out
    assert "saturating Bob vector" in out


def test_z4_min(capsys):
    code, out, _ = run(capsys, "--format", "structured", "z4-min")
    assert code == 0
    rec = json.loads(out)
    assert rec["classical_bound"] == pytest.approx(4.131182236, abs=1e-6)
    assert rec["quantum_value"] == pytest.approx(16 / 3, abs=1e-6)
    assert rec["violated"] is True


def test_z4_scan_flags_degenerate_rows(capsys):
    code, out, _ = run(capsys, "--format", "delimited", "z4-scan", "--grid", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert any(l.endswith("degenerate") for l in lines)
    assert any(not l.endswith("degenerate") for l in lines)


def test_output_file(tmp_path, capsys):
    path = tmp_path / "solids.json"
    code, out, _ = run(capsys, "--format", "structured", "--out", str(path), "solids")
    assert code == 0
    assert out == ""
    assert "tetrahedron" in path.read_text()


def test_structured_output_deterministic_across_threads(capsys):
    outs = []
    for t in ("1", "4"):
        code, out, _ = run(capsys, "--format", "structured", "--threads", t,
                           "bounds", "cuboctahedron", "octahedron")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
