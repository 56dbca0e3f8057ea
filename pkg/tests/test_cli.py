import os

import pytest

from recbench.cli import main
from recbench.ore import format_operator, parse_operator
from recbench.registry import get_entry

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_terms(capsys):
    code, out, _ = run(capsys, "terms", "A187990", "--n", "3")
    assert code == 0
    assert out == "1 117\n2 181\n3 260\n"


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "A187990", "--n", "2")
    assert code == 0
    assert out == "1 117\n2 181\n"


def test_unknown_id_is_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        run(capsys, "terms", "A000000", "--n", "3")
    assert e.value.code == 2


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        run(capsys, "guess", "A187990", "--method", "bogus")
    assert e.value.code == 2


def test_guess_la(capsys):
    code, out, _ = run(capsys, "guess", "A187990", "--method", "la", "--n", "20")
    assert code == 0
    assert "order 1" in out
    assert "degree 3" in out
    assert "operator " in out


def test_verify_pass_and_fail(capsys, tmp_path):
    code, out, _ = run(capsys, "guess", "A187990", "--method", "la", "--n", "20")
    op_line = next(l for l in out.splitlines() if l.startswith("operator "))
    path = tmp_path / "op.txt"
    path.write_text(op_line[len("operator "):] + "\n")
    code, out, _ = run(capsys, "verify", "A187990", "--operator", str(path), "--n", "25")
    assert code == 0
    assert "annihilates yes" in out

    # an operator for a different sequence fails
    wrong = tmp_path / "wrong.txt"
    wrong.write_text("(-2) + (1)*S\n")
    code, out, _ = run(capsys, "verify", "A187990", "--operator", str(wrong), "--n", "10")
    assert code == 1
    assert "annihilates no" in out


def test_verify_right_factor(capsys, tmp_path):
    # L = S - 2 right-divides M = (S - 3)(S - 2)
    L = parse_operator("(-2) + (1)*S")
    M = parse_operator("(6) + (-5)*S + (1)*S^2")
    lp = tmp_path / "L.txt"
    mp = tmp_path / "M.txt"
    lp.write_text(format_operator(L) + "\n")
    mp.write_text(format_operator(M) + "\n")
    # verify against A187990 terms will fail annihilation but the factor
    # check must still be reported
    code, out, _ = run(
        capsys, "verify", "A187990", "--operator", str(lp),
        "--n", "8", "--right-factor-of", str(mp),
    )
    assert "right_factor yes" in out
    assert code == 1  # annihilation failed


def test_gf_stable_output(capsys):
    code1, out1, _ = run(capsys, "gf", "A199250")
    code2, out2, _ = run(capsys, "gf", "A199250")
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.startswith("variables ")
    code, _, err = run(capsys, "gf", "A187990")
    assert code == 2


def test_check_conjectures(capsys):
    code, out, _ = run(capsys, "check-conjectures", "A181280", "--n", "6")
    assert code == 0
    assert "A181280 closed_form checked 4..6 ok" in out
    code, out, _ = run(capsys, "check-conjectures", "A187990")
    assert code == 0
    assert "no conjectures" in out


def test_report_cli(capsys):
    code, out, _ = run(capsys, "report", "A187990", "--budget", "30")
    assert code == 0
    assert out.startswith("A187990 ")
    assert "status=P" in out


def test_fetch_uses_cache(capsys):
    code, out, _ = run(capsys, "fetch", "A177317", "--cache-dir", FIXTURES)
    assert code == 0
    assert out == "A177317 offset=0 terms=29\n"


def test_fetch_network_disabled(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("RECBENCH_NETWORK", "off")
    monkeypatch.setenv("RECBENCH_CONFIG", str(tmp_path / "none"))
    code, _, err = run(capsys, "fetch", "A000001", "--cache-dir", str(tmp_path))
    assert code == 1
    assert "no cached b-file" in err
