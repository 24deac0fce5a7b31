"""Command-line interface: formats, determinism, exit codes."""

import json
import subprocess
import sys

import pytest

from bellgamma import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_approx_text(capsys):
    code, out, err = run_cli(capsys, "approx", "--a", "3", "--mu", "1",
                             "--n", "2")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "a=3 mu=1 n=2"
    assert lines[1] == "p = 13/2"
    assert lines[2] == "q = 11"
    assert lines[3] == "p/q = 0.5909090909090909090909090909090909090909"
    assert lines[4] == "err_log10 = -1.86349"
    assert lines[5] == "predicted_log10 = -2.28153"


def test_approx_json(capsys):
    code, out, _ = run_cli(capsys, "approx", "--a", "2", "--mu", "1",
                           "--n", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["p"] == "1/1" and data["q"] == "2"
    assert data["p_over_q"].startswith("0.5000000000")
    assert data["err_log10"] == pytest.approx(-1.112294584506738)
    assert data["predicted_log10"] == pytest.approx(-1.737177927613007)


def test_approx_second_combination(capsys):
    code, out, _ = run_cli(capsys, "approx", "--a", "3", "--mu", "2",
                           "--n", "1")
    assert code == 0
    assert "p = 18" in out and "q = 2" in out


def test_approx_csv(capsys):
    code, out, _ = run_cli(capsys, "approx", "--a", "2", "--mu", "1",
                           "--n", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "a,mu,n,p_num,p_den,q,err_log10,predicted_log10"
    assert lines[1].startswith("2,1,3,59,3,34,")


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "--a", "2", "--mu", "1",
                           "--n", "0:5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "a,mu,n,p_num,p_den,q,err_log10,predicted_log10"
    assert len(lines) == 7
    assert lines[1] == "2,1,0,0,1,1,-0.238662,0"
    assert lines[2].startswith("2,1,1,1,1,2,")
    assert lines[6].startswith("2,1,5,13396,15,1546,")


def test_table_range_step(capsys):
    code, out, _ = run_cli(capsys, "table", "--a", "3", "--mu", "1",
                           "--n", "0:9:3")
    assert code == 0
    ns = [line.split(",")[2] for line in out.splitlines()[1:]]
    assert ns == ["0", "3", "6", "9"]


def test_table_qn_ratio_column(capsys):
    code, out, _ = run_cli(capsys, "table", "--a", "2", "--mu", "1",
                           "--n", "0:4", "--qn-ratio")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].endswith(",qn_ratio")
    # no prediction at n = 0: empty cell
    assert lines[1].endswith(",")
    ratio = float(lines[4].rsplit(",", 1)[1])
    assert 0.5 < ratio < 2.0


def test_table_json(capsys):
    code, out, _ = run_cli(capsys, "table", "--a", "3", "--mu", "2",
                           "--n", "1:3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [r["n"] for r in rows] == [1, 2, 3]
    assert rows[0]["p_num"] == 18 and rows[0]["p_den"] == 1
    assert rows[1]["q"] == 11


def test_table_text_grid(capsys):
    code, out, _ = run_cli(capsys, "table", "--a", "2", "--mu", "1",
                           "--n", "0:2", "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["a", "mu", "n", "p_num", "p_den", "q",
                                "err_log10", "predicted_log10"]
    assert len(lines) == 4


def test_out_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run_cli(capsys, "table", "--a", "2", "--mu", "1",
                           "--n", "0:3", "--out", str(target))
    assert code == 0
    text = target.read_text()
    assert text.splitlines()[0].startswith("a,mu,n,")
    assert len(text.splitlines()) == 5


def test_constants_output(capsys):
    code, out, _ = run_cli(capsys, "constants", "--digits", "30",
                           "--zeta-max", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "gamma = 0.577215664901532860606512090082"
    assert lines[1] == "zeta(2) = 1.644934066848226436472415166646"
    assert lines[2] == "zeta(3) = 1.202056903159594285399738161511"


def test_constants_env_digits(capsys, monkeypatch):
    monkeypatch.setenv("BELLGAMMA_DIGITS", "12")
    code, out, _ = run_cli(capsys, "constants", "--zeta-max", "2",
                           "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["name,value", "gamma,0.577215664902",
                                "zeta(2),1.644934066848"]


def test_constants_bad_env(capsys, monkeypatch):
    monkeypatch.setenv("BELLGAMMA_DIGITS", "zero")
    code, _, err = run_cli(capsys, "constants")
    assert code == 2
    assert "BELLGAMMA_DIGITS" in err


def test_verify_bell_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "bell")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert lines[-1] == "3/3 checks passed"


def test_verify_tail_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "tail",
                           "--digits", "15")
    assert code == 0
    assert out.splitlines()[-1] == "3/3 checks passed"


def test_verify_lemma1_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "lemma1",
                           "--a", "3", "--nmax", "5")
    assert code == 0
    assert out.splitlines()[-1] == "2/2 checks passed"


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(cli._SUITES, "bell",
                        lambda cfg: [("forced failure", False)])
    code, out, _ = run_cli(capsys, "verify", "--suite", "bell")
    assert code == 1
    assert "FAIL forced failure" in out
    assert out.splitlines()[-1] == "0/1 checks passed"


def test_asymptotics_json(capsys):
    code, out, _ = run_cli(capsys, "asymptotics", "--a", "4", "--kind",
                           "corollary", "--n", "100", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 1
    assert rows[0]["b"] == ["-4", "-3/2", "-5/8", "-1/4"]
    assert rows[0]["value_at_n"] == pytest.approx(-98.4675299443404)


def test_asymptotics_all_kinds_csv(capsys):
    code, out, _ = run_cli(capsys, "asymptotics", "--a", "3",
                           "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "a,kind,m,b_m"
    assert lines[1] == "3,theorem-linear-form,1,-3"
    assert len(lines) == 10


def test_roots_csv(capsys):
    code, out, _ = run_cli(capsys, "roots", "--a", "2", "--u", "1",
                           "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,re,im,residual_over_n,seed_distance"
    assert len(lines) == 3
    for line in lines[1:]:
        k, re, im, res, dist = line.split(",")
        assert abs(float(re) - 1.0) < 0.01
        assert float(res) < 1e-10


def test_roots_json(capsys):
    code, out, _ = run_cli(capsys, "roots", "--a", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 3
    assert all("re" in r and "im" in r for r in rows)


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "approx", "--a", "9", "--mu", "1",
                           "--n", "2")
    assert code == 2 and "--a out of range" in err
    code, _, err = run_cli(capsys, "approx", "--a", "3", "--mu", "3",
                           "--n", "2")
    assert code == 2 and "mu" in err
    code, _, err = run_cli(capsys, "table", "--a", "2", "--mu", "1",
                           "--n", "5:1")
    assert code == 2
    code, _, err = run_cli(capsys, "table", "--a", "2", "--mu", "1",
                           "--n", "0:10:0")
    assert code == 2
    code, _, err = run_cli(capsys, "roots", "--a", "3", "--u", "5")
    assert code == 2
    code, _, err = run_cli(capsys, "roots", "--a", "3", "--n", "10")
    assert code == 2


def test_argparse_rejects_unknown(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        cli.main(["nothere"])


def test_precision_exit_code(capsys):
    code, _, err = run_cli(capsys, "approx", "--a", "3", "--mu", "1",
                           "--n", "50", "--digits", "2")
    assert code == 3
    assert err.startswith("precision failure")


def test_subprocess_determinism():
    cmd = [sys.executable, "-m", "bellgamma.cli", "table", "--a", "3",
           "--mu", "2", "--n", "0:12:4"]
    one = subprocess.run(cmd, capture_output=True, check=True)
    two = subprocess.run(cmd, capture_output=True, check=True)
    assert one.stdout == two.stdout
    assert one.stdout.decode().count("\n") == 5
