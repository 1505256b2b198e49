import csv
import json
import subprocess
import sys

import pytest

from normaltiling.cli import main
from normaltiling.document import emit_tiling, parse_tiling
from normaltiling.generators import hex_patch

from _fixtures import split_neighbour, star_patch


@pytest.fixture
def hexfile(tmp_path):
    p = tmp_path / "hex.json"
    p.write_text(emit_tiling(hex_patch(6)))
    return p


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_generate_hex(tmp_path):
    out = tmp_path / "h.json"
    assert main(["generate", "hex", "--rings", "2", "-o", str(out)]) == 0
    assert len(parse_tiling(out.read_text()).interior_faces) == 19


def test_generate_disclination_realized(tmp_path, capsys):
    out = tmp_path / "d.json"
    code = main(["generate", "disclination", "--rings", "2", "--extra-index", "1",
                 "--realize", "-o", str(out)])
    assert code == 0
    t = parse_tiling(out.read_text())
    assert t.has_coords and t.sides(0) == 7
    assert "converged=True" in capsys.readouterr().err


def test_generate_rejects_c_zero():
    assert main(["generate", "disclination", "--rings", "2", "--extra-index", "0"]) == 1


def test_normalize_with_trace(tmp_path):
    src, out, trace = tmp_path / "s.json", tmp_path / "n.json", tmp_path / "t.json"
    src.write_text(emit_tiling(star_patch(5)))
    assert main(["normalize", str(src), str(out), "--trace", str(trace)]) == 0
    tr = json.loads(trace.read_text())
    assert tr["index_sum_after"] - tr["index_sum_before"] == 4
    assert len(parse_tiling(out.read_text()).zero_length) == 2


def test_normalize_absorbs_t_vertices(tmp_path):
    t, w = split_neighbour(hex_patch(2), 0, 1)
    src, out = tmp_path / "s.json", tmp_path / "n.json"
    src.write_text(emit_tiling(t))
    assert main(["normalize", str(src), str(out)]) == 0
    assert w in parse_tiling(out.read_text()).face_cycle(0)


def test_dual(hexfile, tmp_path):
    out = tmp_path / "dual.json"
    assert main(["dual", str(hexfile), "--origin", "0", "-o", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["origin"] == 0 and len(d["nodes"]) == 127


def test_grow(hexfile, tmp_path):
    out = tmp_path / "g.csv"
    assert main(["grow", str(hexfile), "--origin", "0", "--radius", "6", "--csv", str(out)]) == 0
    rows = read_csv(out)
    assert [int(r["S"]) for r in rows] == [1, 6, 12, 18, 24]
    assert all(r["residual_S"] in ("", "0") for r in rows)


def test_simulate(tmp_path):
    out = tmp_path / "s.csv"
    code = main(["simulate", "--base-degree", "6", "--defect", "2:0:1", "--radius", "8",
                 "--csv", str(out)])
    assert code == 0
    rows = read_csv(out)
    assert [int(r["J"]) for r in rows[1:]] == [6, 6, 7, 7, 7, 7, 7, 7]


def test_simulate_bad_slot():
    assert main(["simulate", "--base-degree", "6", "--defect", "1:9:1", "--radius", "4"]) == 1


def test_verify(hexfile, tmp_path):
    out = tmp_path / "v.json"
    assert main(["verify", str(hexfile), "--json", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["C"] == 0 and rep["satisfied"] and rep["packing_ok"]


def test_verify_pentagon_fails(tmp_path):
    from _fixtures import modified_hex
    base = hex_patch(2)
    u, v = base.face_cycle(0)[:2]
    src = tmp_path / "p.json"
    src.write_text(emit_tiling(modified_hex(base, contractions=[(u, [v])])))
    assert main(["verify", str(src)]) == 1


def test_render(hexfile, tmp_path):
    for mode in ("tiling", "dual", "balls"):
        out = tmp_path / f"{mode}.svg"
        assert main(["render", str(hexfile), "--mode", mode, "--origin", "0", "-o", str(out)]) == 0
        assert out.read_text().startswith("<?xml")


def test_validation_failure_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": "tiling/1", "vertices": [], "faces": []}')
    assert main(["normalize", str(bad), str(tmp_path / "o.json")]) == 1
    assert "error:" in capsys.readouterr().err
    assert main(["verify", str(tmp_path / "missing.json")]) == 1


@pytest.mark.parametrize("argv", [[], ["generate"], ["simulate", "--radius", "3"],
                                  ["simulate", "--base-degree", "6", "--radius", "3",
                                   "--defect", "x"],
                                  ["render", "f", "--mode", "nope"]])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_console_script_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "normaltiling.cli", "generate", "hex", "--rings", "1"],
                         capture_output=True, text=True, check=True)
    assert len(parse_tiling(out.stdout).interior_faces) == 7
