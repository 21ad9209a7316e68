import json
import subprocess
import sys

import numpy as np
import pytest

from symporder import cli, generators as gen, io, prequant
from symporder.errors import InputError


@pytest.fixture()
def loop_file(tmp_path):
    name = str(tmp_path / "loop.json")
    io.save_path(gen.rotation_loop(1, 129), name)
    return name


@pytest.fixture()
def cos_grid_file(tmp_path):
    (p,) = prequant.torus_grid((64,))
    name = str(tmp_path / "cos.json")
    io.save_grid(prequant.normalize_leaf(np.cos(2 * np.pi * p)), name)
    return name


def test_path_round_trip_is_bit_exact(tmp_path, loop_file):
    path = gen.rotation_loop(1, 129)
    loaded = io.load_path(loop_file)
    assert np.array_equal(loaded.times, path.times)
    assert np.array_equal(loaded.matrices, path.matrices)


def test_grid_round_trip_is_bit_exact(tmp_path):
    rng = np.random.default_rng(2)
    leaf = prequant.normalize_leaf(rng.normal(size=(8, 8)))
    name = str(tmp_path / "g.json")
    io.save_grid(leaf, name)
    loaded = io.load_grid(name)
    assert loaded.normalized
    assert np.array_equal(loaded.values, leaf.values)


def test_quant_round_trip_and_mean_folding(tmp_path):
    name = str(tmp_path / "q.json")
    with open(name, "w") as fh:
        json.dump({"shift": 1.0, "grid_shape": [4], "values": [1.0, 2.0, 3.0, 2.0]}, fh)
    element = io.load_quant_element(name)
    assert element.shift == pytest.approx(3.0)
    assert element.func.values.mean() == 0.0
    back = str(tmp_path / "q2.json")
    io.save_quant_element(element, back)
    again = io.load_quant_element(back)
    assert again.shift == element.shift
    assert np.array_equal(again.func.values, element.func.values)


def test_load_errors_carry_the_filename(tmp_path):
    missing = str(tmp_path / "nope.json")
    with pytest.raises(InputError, match="nope.json"):
        io.load_path(missing)
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2,\n  broken\n}')
    with pytest.raises(InputError, match=r"bad.json:2:3"):
        io.load_path(str(bad))
    nokey = tmp_path / "nokey.json"
    nokey.write_text('{"dim": 2}')
    with pytest.raises(InputError, match="times"):
        io.load_path(str(nokey))


def test_load_path_validates_contents(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps({
        "dim": 2,
        "times": [0.0, 0.5, 1.0],
        "matrices": [[1.0, 0.0, 0.0, 1.0], [2.0, 0.0, 0.0, 1.0], [1.0, 0.0, 0.0, 1.0]],
    }))
    with pytest.raises(InputError, match="broken.json"):
        io.load_path(str(broken))


def run_cli(args, capsys):
    code = cli.run(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_maslov_report(loop_file, capsys):
    code, out, err = run_cli(["maslov", loop_file], capsys)
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["command"] == "maslov"
    assert doc["turns"] == pytest.approx(1.0, abs=1e-9)
    assert "radians" in doc["convention"]
    assert doc["version"]


def test_cli_out_flag_writes_file(tmp_path, loop_file, capsys):
    dest = str(tmp_path / "report.json")
    code, out, _ = run_cli(["maslov", loop_file, "--out", dest], capsys)
    assert code == 0 and out == ""
    with open(dest) as fh:
        assert json.load(fh)["command"] == "maslov"


def test_cli_is_deterministic_across_processes(loop_file):
    cmd = [sys.executable, "-m", "symporder.cli", "maslov", loop_file]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout.endswith(b"\n")


def test_cli_exit_codes(tmp_path, loop_file, capsys):
    code, _, err = run_cli(["maslov", str(tmp_path / "absent.json")], capsys)
    assert code == 1 and "absent.json" in err
    code, _, _ = run_cli(["not-a-command"], capsys)
    assert code == 1
    code, _, err = run_cli(["kdist", loop_file, loop_file, "--cemp", "100"], capsys)
    assert code == 2 and "increase k_max" in err


def test_cli_order_and_cone(tmp_path, loop_file, capsys):
    fast = str(tmp_path / "fast.json")
    io.save_path(gen.rotation_loop(2, 129), fast)
    code, out, _ = run_cli(["order", fast, loop_file], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["certifies"] is True and doc["status"] == "dominant"
    code, out, _ = run_cli(["cone", loop_file], capsys)
    assert json.loads(out)["status"] == "dominant"


def test_cli_synth_and_reload(tmp_path, capsys):
    target = tmp_path / "target.json"
    target.write_text(json.dumps({"dim": 2, "matrix": [2.0, 0.0, 0.0, 0.5]}))
    dest = str(tmp_path / "path.json")
    code, out, _ = run_cli(["synth-positive", str(target), dest, "--grid", "129"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["endpoint_error"] < 1e-8
    assert doc["winding"] <= doc["winding_budget"] + 1e-6
    reloaded = io.load_path(dest)
    assert np.abs(reloaded.endpoint - np.diag([2.0, 0.5])).max() < 1e-8


def test_cli_redistribute(tmp_path, capsys):
    herm = tmp_path / "herm.json"
    herm.write_text(json.dumps({"n": 2, "real": [5 * np.pi, 0.0, 0.0, -np.pi],
                                "imag": [0.0, 0.0, 0.0, 0.0]}))
    code, out, _ = run_cli(["redistribute", str(herm), str(4 * np.pi)], capsys)
    assert code == 0
    doc = json.loads(out)
    assert sorted(doc["eigenvalues"]) == pytest.approx([np.pi, 3 * np.pi])
    assert doc["trace"] == pytest.approx(4 * np.pi)


def test_cli_gamma_with_csv(tmp_path, capsys):
    # exact-tie staircase rungs need a fine grid to come out sharp
    slow, fast = str(tmp_path / "slow.json"), str(tmp_path / "fast.json")
    io.save_path(gen.rotation_loop(1, 513), slow)
    io.save_path(gen.rotation_loop(2, 513), fast)
    csv = str(tmp_path / "stairs.csv")
    code, out, _ = run_cli(["gamma", slow, fast, "--nmax", "4", "--csv", csv], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["gamma_ns"] == [2, 4, 8]
    assert doc["closed_form"] == pytest.approx(2.0, abs=1e-7)
    with open(csv) as fh:
        assert fh.read() == "n,gamma_n\n1,2\n2,4\n4,8\n"


def test_cli_quant_commands(tmp_path, cos_grid_file, capsys):
    qa, qb = str(tmp_path / "qa.json"), str(tmp_path / "qb.json")
    (p,) = prequant.torus_grid((64,))
    leaf = prequant.normalize_leaf(np.cos(2 * np.pi * p))
    io.save_quant_element(prequant.QuantElement(2.0, leaf), qa)
    io.save_quant_element(prequant.QuantElement(3.0, leaf), qb)
    code, out, _ = run_cli(["quant-gamma", qa, qb, "--n", "10"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["gamma"] == pytest.approx(2.0) and doc["gamma_n"] == 20
    code, out, _ = run_cli(["quant-k", qa, qb], capsys)
    assert json.loads(out)["value"] == pytest.approx(np.log(2.0))
    code, out, _ = run_cli(["rot-distance", "2.0", cos_grid_file], capsys)
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(0.5 * np.log(3.0))
    assert doc["minimizer"] == pytest.approx(np.sqrt(3.0))


def test_cli_embed_isometry_through_files(tmp_path, capsys):
    rng = np.random.default_rng(5)
    f = prequant.normalize_leaf(rng.normal(size=32))
    g = prequant.normalize_leaf(rng.normal(size=32))
    ff, gf = str(tmp_path / "f.json"), str(tmp_path / "g.json")
    io.save_grid(f, ff)
    io.save_grid(g, gf)
    ef, eg = str(tmp_path / "ef.json"), str(tmp_path / "eg.json")
    assert cli.run(["embed", ff, ef]) == 0
    assert cli.run(["embed", gf, eg]) == 0
    capsys.readouterr()
    code, out, _ = run_cli(["quant-k", ef, eg], capsys)
    expected = float(np.abs(f.values - g.values).max())
    assert json.loads(out)["value"] == pytest.approx(expected, abs=1e-12)


def test_cli_cw(tmp_path, cos_grid_file, capsys):
    code, out, _ = run_cli(["cw", cos_grid_file, cos_grid_file], capsys)
    assert code == 0
    assert abs(json.loads(out)["value"]) < 1e-12
    code, out, _ = run_cli(["cw", cos_grid_file, "--weights",
                            ",".join(["1"] * 64)], capsys)
    assert code == 0


def test_cli_verify_quant_suite(capsys):
    code, out, _ = run_cli(["verify", "--suite", "quant"], capsys)
    assert code == 0
    assert "4/4 criteria passed" in out
    assert out.count("[PASS]") == 4
