import csv
import io
import json

import pytest

from qcenter.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_level_example(capsys):
    code, out, _ = run(capsys, "check-level", "--type", "G2", "--ell", "9")
    assert code == 0
    assert out.startswith("reject (a3)")
    code, out, _ = run(capsys, "check-level", "--type", "G2", "--ell", "9", "--format", "json")
    data = json.loads(out)
    assert data["schema"] == 1 and data["verdict"] == "reject" and data["reasons"] == ["a3"]


def test_springer_example(capsys):
    assert run(capsys, "springer-dim", "--partition", "3") == (0, "1\n", "")
    code, _, err = run(capsys, "springer-dim", "--partition", "2,1", "--type", "G2")
    assert code == 2 and "unsupported" in err


def test_verify_main_example(capsys):
    code, out, _ = run(capsys, "verify-main", "--type", "A1", "--cutoff", "6", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["c1"] for r in rows] == ["0", "2", "4", "6"]
    assert all(r["lhs"] == r["rhs"] == "1" and r["equal"] == "1" for r in rows)


def test_verify_main_emit_alias(capsys):
    code, out, _ = run(capsys, "verify-main", "--type", "A2", "--cutoff", "6", "--emit", "csv")
    assert code == 0 and out.splitlines()[0] == "c1,c2,lhs,rhs,equal"


def test_figures(capsys, tmp_path):
    fig = tmp_path / "w.png"
    code, _, _ = run(capsys, "freudenthal", "--type", "B2", "--weight", "1,1", "--figure", str(fig))
    assert code == 0 and fig.stat().st_size > 0
    fig2 = tmp_path / "m.png"
    code, _, _ = run(capsys, "verify-main", "--type", "A2", "--cutoff", "6", "--figure", str(fig2))
    assert code == 0 and fig2.stat().st_size > 0
    fig3 = tmp_path / "a1.png"
    assert run(capsys, "freudenthal", "--type", "A1", "--weight", "3", "--figure", str(fig3))[0] == 0


@pytest.mark.parametrize("argv,needle", [
    (["root-info", "--type", "B2"], "|W| = 8"),
    (["char", "--type", "A1", "--weight", "2"], "1*e[0]"),
    (["freudenthal", "--type", "A2", "--weight", "1,1"], "0,0: 2"),
    (["tensor", "--type", "A1", "--weight", "1", "--weight2", "1"], "dim 4 = 4"),
    (["euler", "--type", "A1", "--weight", "-2"], "-1*ch[0]"),
    (["tau", "--type", "A1", "--x", "E1", "--y", "F1"], "(q)/(-q^2 + 1)"),
    (["serre-check", "--type", "B2", "--height", "4"], "certificates vanish"),
    (["kappa", "--type", "A1", "--v", "K[2]", "--u", "K[2]"], "q^-1"),
    (["c-basis", "--type", "A1", "--weight", "1"], "q^-1*chi[1] + q*chi[-1]"),
    (["xi-har", "--type", "A1", "--weight", "0", "--t", "1+q"], "1"),
    (["xi-har", "--type", "A1", "--char", "q^-1*chi[1] + q*chi[-1]", "--t", "q^2"], "q + q^-1"),
    (["regular", "--type", "A1", "--t", "q^3"], "regular: orbit size 2"),
    (["exceptional", "--type", "A1", "--h0", "q", "--zeta-order", "2"], "exceptional"),
    (["compatible", "--type", "A1", "--t", "q", "--ell", "3", "--h0", "q^12", "--zeta-order", "15"], "compatible via"),
    (["verify-theta", "--type", "A2", "--weight", "1,0", "--probe-height", "2"], "relations hold"),
    (["check-level", "--type", "A2", "--ell", "5", "--h0", "q,q^2", "--zeta-order", "3"], "accept"),
])
def test_commands(capsys, argv, needle):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    assert needle in out


@pytest.mark.parametrize("argv", [
    ["root-info", "--type", "A2"],
    ["freudenthal", "--type", "G2", "--weight", "1,0"],
    ["tau", "--type", "A2", "--x", "E1 E2", "--y", "F2 F1"],
    ["serre-check", "--type", "A2", "--height", "3"],
    ["verify-theta", "--type", "A1", "--weight", "2"],
    ["xi-har", "--type", "A1", "--weight", "1", "--t", "q^3"],
    ["selftest", "--seed", "3"],
])
def test_json_schema(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0 and json.loads(out)["schema"] == 1


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["char", "--type", "Z9", "--weight", "1"],
    ["char", "--type", "A1", "--weight", "1,1"],
    ["char", "--type", "A2", "--weight", "1,-1"],
    ["char", "--type", "A2"],
    ["tau", "--type", "A1", "--x", "E7", "--y", "F1"],
    ["regular", "--type", "A2", "--t", "q"],
    ["check-level", "--type", "A1"],
    ["check-level", "--type", "A1", "--ell", "1"],
    ["exceptional", "--type", "A1", "--h0", "q"],
    ["xi-har", "--type", "A1", "--char", "chi[1]", "--t", "q"],
    ["kappa", "--type", "A1", "--v", "1", "--u", "K[1]"],
    ["tau", "--type", "A1", "--x", "E1", "--y", "F1", "--format", "csv"],
    ["springer-dim", "--partition", "x"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_truncation_exit(capsys):
    code, _, err = run(capsys, "verify-main", "--type", "A2", "--cutoff", "4", "--weight", "3,0")
    assert code == 3 and "truncation" in err
    code, out, _ = run(capsys, "verify-main", "--type", "A2", "--cutoff", "6", "--weight", "3,0")
    assert code == 0 and "lhs 1 rhs 1" in out


def test_selftest_deterministic(capsys):
    a = run(capsys, "selftest", "--seed", "5")
    b = run(capsys, "selftest", "--seed", "5")
    assert a == b and a[0] == 0


def test_help_lists_csv_columns(capsys):
    assert main(["verify-main", "--help"]) == 0
    out = capsys.readouterr().out
    assert "csv columns" in out
