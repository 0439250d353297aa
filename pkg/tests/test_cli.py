import json
import subprocess
import sys

import pytest

from datashare.cli import main

EX1 = ["--r-f", "1", "--r-g", "1", "--c", "0.32", "--m", "-0.1"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_ref_instance(capsys):
    code, out, _ = run(capsys, "solve", *EX1)
    d = json.loads(out)
    assert code == 0
    assert (d["alpha"], d["x"], d["U"], d["V"]) == (0.68, 0.0, 0.252, 0.748)
    assert d["kind"] == "IndifferencePoint"


def test_solve_no_interaction(capsys):
    _, out, _ = run(capsys, "solve", "--r-f", "1", "--r-g", "1", "--c", "1.5", "--m", "0.5")
    d = json.loads(out)
    assert (d["alpha"], d["x"]) == (0.0, 0.0)


def test_instance_file_round_trip(capsys, tmp_path):
    path = tmp_path / "i.json"
    path.write_text(json.dumps({"r_f": 1, "r_g": 1, "c": 0.32, "m": -0.1}))
    _, a, _ = run(capsys, "solve", "--instance", str(path))
    _, b, _ = run(capsys, "solve", *EX1)
    assert a == b


def test_oracle_check_deterministic(capsys):
    code, a, _ = run(capsys, "oracle-check", "--seed", "7", "--n", "100", "--grid-points", "10001")
    _, b, _ = run(capsys, "oracle-check", "--seed", "7", "--n", "100", "--grid-points", "10001")
    d = json.loads(a)
    assert code == 0 and a == b
    assert d["max_alpha_err"] <= 2e-4 and d["failures"] == []


def test_pareto_and_csv(capsys, tmp_path):
    out = tmp_path / "p.csv"
    code, text, _ = run(capsys, "pareto", "--r-f", "1", "--r-g", "1", "--c", "0.32", "--out", str(out), "--steps", "21")
    ivs = json.loads(text)["intervals"]
    assert code == 0
    assert [(i["lo"], i["hi"]) for i in ivs] == [(-1.0, -0.36), (-0.28, 0.0)]
    assert len(out.read_text().splitlines()) == 22


def test_price(capsys):
    code, text, _ = run(capsys, "price", "--r-f", "1", "--r-g", "1", "--c", "0.2", "--lambda", "0.7")
    d = json.loads(text)
    assert code == 0 and d["objective_value"] == 0.88 and d["method"] == "closed_form"
    assert d["intervals"][0]["lo"] == 0.2


def test_sweep_outputs_deterministic(capsys, tmp_path):
    files = []
    for k in range(2):
        out = tmp_path / f"s{k}.csv"
        code, _, _ = run(
            capsys, "sweep", *EX1, "--axis1", "c:0:1:5", "--axis2", "m:-1:1:5", "--out", str(out)
        )
        assert code == 0
        files.append(out.read_bytes())
    assert files[0] == files[1]
    assert len(files[0].decode().splitlines()) == 26


def test_sweep_svg_from_spec(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(
        json.dumps(
            {
                "base": {"r_f": 1, "r_g": 1, "c": 0.3, "m": 0},
                "axis1": {"name": "c", "min": 0, "max": 1, "steps": 4},
                "axis2": {"name": "m", "min": -1, "max": 1, "steps": 4},
            }
        )
    )
    out = tmp_path / "k.svg"
    code, _, _ = run(capsys, "sweep", "--spec", str(spec), "--format", "svg", "--out", str(out))
    assert code == 0 and out.read_text().startswith("<svg")


def test_curve_stdout(capsys):
    code, text, _ = run(capsys, "curve", *EX1, "--steps", "11")
    lines = text.splitlines()
    assert code == 0 and lines[0] == "alpha,U,x_reply" and len(lines) == 1 + 13


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--r-f", "1"],
        ["solve", *EX1, "--instance", "x.json"],
        ["sweep", *EX1, "--axis1", "c:0:1", "--axis2", "m:-1:1:3", "--out", "x"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--r-f", "-1", "--r-g", "1", "--c", "0.3", "--m", "0"],
        ["price", "--r-f", "1", "--r-g", "1", "--c", "0.3", "--lambda", "-1"],
        ["solve", "--instance", "/nonexistent.json"],
    ],
)
def test_domain_errors_exit_1(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("datashare: error:")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "datashare", "solve", *EX1], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["alpha"] == 0.68
