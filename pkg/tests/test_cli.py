import json

import pytest

from rankguard.cli import main
from rankguard.codes import gabidulin, LinearCode
from rankguard import ctx_new


def run(args):
    return main(args)


def test_build_scheme_and_reports(tmp_path, capsys):
    scheme_path = tmp_path / "scheme.json"
    assert run(["build-scheme", "--q", "2", "--m", "4", "--l", "1", "--n", "3",
                "--k", "2", "--out", str(scheme_path)]) == 0
    data = json.loads(scheme_path.read_text())
    assert data["version"] == 1
    assert (data["l"], data["n"], data["k"]) == (1, 3, 2)
    assert data["modulus"] == [1, 1, 0, 0, 1]

    report_path = tmp_path / "report.json"
    assert run(["equivocation", "--scheme", str(scheme_path), "--mu", "2",
                "--dist", "uniform", "--out", str(report_path)]) == 0
    report = json.loads(report_path.read_text())
    assert report["max_leakage_exact_integer"] == 1
    assert report["predicted"] == 1
    assert report["sandwich_holds"]

    strength_path = tmp_path / "strength.json"
    assert run(["strength", "--scheme", str(scheme_path), "--out", str(strength_path)]) == 0
    strength = json.loads(strength_path.read_text())
    assert strength == {"omega": 1, "lower_bound": 1, "upper_bound": 1}

    cap_path = tmp_path / "cap.json"
    assert run(["verify-capability", "--scheme", str(scheme_path), "--t", "0",
                "--rho", "1", "--mode", "exhaustive", "--out", str(cap_path)]) == 0
    cap = json.loads(cap_path.read_text())
    assert cap["verified"] is True
    assert run(["verify-capability", "--scheme", str(scheme_path), "--t", "1",
                "--rho", "0", "--mode", "exhaustive", "--out", str(cap_path)]) == 0
    assert json.loads(cap_path.read_text())["verified"] is False


def test_rgrw_tables_csv(tmp_path):
    ctx = ctx_new(2, 4)
    c1 = gabidulin(ctx, 4, 2)
    c2 = LinearCode(ctx, [c1.encode((1, ctx.alpha))], 4)
    c1_path, c2_path = tmp_path / "c1.json", tmp_path / "c2.json"
    c1_path.write_text(json.dumps(c1.to_json()))
    c2_path.write_text(json.dumps(c2.to_json()))
    out = tmp_path / "table.csv"
    assert run(["rgrw", "--code", str(c1_path), "--subcode", str(c2_path),
                "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "parameter,i,value"
    table = {(p, int(i)): int(v) for p, i, v in (ln.split(",") for ln in lines[1:])}
    assert table[("rdip", 0)] == 0
    assert table[("rdip", 4)] == 1
    assert table[("rgrw", 1)] == 3
    # both subcommands emit the same tables
    out2 = tmp_path / "table2.csv"
    assert run(["rdip", "--code", str(c1_path), "--subcode", str(c2_path),
                "--out", str(out2)]) == 0
    assert out.read_text() == out2.read_text()


def test_simulate_deterministic_and_successful(tmp_path):
    config = {"version": 1, "q": 2, "m": 4, "l": 1, "n": 3, "k": 2, "N": 3,
              "mu": 0, "t": 0, "rho_max": 0, "trials": 25, "seed": 9,
              "mode": "coherent"}
    cfg = tmp_path / "scenario.json"
    cfg.write_text(json.dumps(config))
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(["simulate", "--config", str(cfg), "--out", str(out1)]) == 0
    assert run(["simulate", "--config", str(cfg), "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    rows = out1.read_text().strip().splitlines()[1:]
    assert len(rows) == 25
    assert all(row.split(",")[3] == "1" for row in rows)


def test_simulate_noncoherent(tmp_path):
    config = {"version": 1, "q": 2, "m": 7, "l": 1, "n": 3, "k": 2, "N": 3,
              "mu": 0, "t": 0, "rho_max": 1, "trials": 10, "seed": 3,
              "mode": "noncoherent"}
    cfg = tmp_path / "scenario.json"
    cfg.write_text(json.dumps(config))
    out = tmp_path / "trials.csv"
    assert run(["simulate", "--config", str(cfg), "--out", str(out)]) == 0
    rows = out.read_text().strip().splitlines()[1:]
    assert all(row.split(",")[3] == "1" for row in rows)


def test_acceptance_subcommand(capsys):
    assert run(["acceptance", "mrd"]) == 0
    out = capsys.readouterr().out
    assert "4/4 criteria passed" in out


def test_exit_code_precondition(tmp_path, capsys):
    # reducible modulus -> precondition violation -> exit 2
    assert run(["build-scheme", "--q", "2", "--m", "4", "--modulus", "1,0,1,0,1",
                "--l", "1", "--n", "3", "--k", "2"]) == 2
    err = capsys.readouterr().err
    assert "error" in err
    # missing scenario fields named explicitly
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"version": 1, "q": 2}))
    assert run(["simulate", "--config", str(cfg)]) == 2
    assert "missing fields" in capsys.readouterr().err


def test_exit_code_enumeration(tmp_path, capsys):
    # a scheme whose joint support overflows the exact-enumeration cap
    scheme_path = tmp_path / "big.json"
    assert run(["build-scheme", "--q", "2", "--m", "6", "--l", "1", "--n", "5",
                "--k", "4", "--out", str(scheme_path)]) == 0
    assert run(["equivocation", "--scheme", str(scheme_path), "--mu", "1",
                "--dist", "uniform"]) == 3
    assert "enumeration too large" in capsys.readouterr().err


def test_unknown_suite(capsys):
    assert run(["acceptance", "nope"]) == 2
    assert "unknown suite" in capsys.readouterr().err
