import json
import subprocess
import sys


from edslab.cli import main, run
from edslab.padic import LimitCertificate
from edslab.periodicity import PeriodCertificate

EX1 = ["--curve", "0 0 1 -1 0", "--point", "0 0"]
TERMS_37 = "1 1 -1 1 2 -1 -3 -5 7 -4 -23 29 59 129 -314 -65 1529 -3689 -8209 -16264"


def test_eds_gen():
    code, out, _ = run(["eds", "gen", "--w", "1", "-1", "1", "--n", "20"])
    assert code == 0 and out == "0 " + TERMS_37
    code, out, _ = run(["eds", "gen", *EX1, "--n", "20"])
    assert out == "0 " + TERMS_37
    assert run(["eds", "gen", "--w", "1 -1 1", "--n", "1"])[1] == "0 1"
    code, out, _ = run(["eds", "gen", "--w", "1", "-1", "1", "--n", "5", "--json"])
    assert json.loads(out)["terms"] == [0, 1, 1, -1, 1, 2]
    code, out, _ = run(["eds", "gen", "--w", "1", "-1", "1", "--n", "2", "--csv"])
    assert out.splitlines() == ["n,W_n", "0,0", "1,1", "2,1"]


def test_improper_input_exit_2():
    code, _, err = run(["eds", "gen", "--w", "2", "1", "3", "--n", "5"])
    assert code == 2 and "proper" in err
    assert run(["period", "--curve", "0 0 0 0 0", "--point", "0 0", "-p", "5"])[0] == 2
    assert run(["period", *EX1, "-p", "9"])[0] == 2


def test_period():
    code, out, _ = run(["period", *EX1, "-p", "5"])
    cert = PeriodCertificate.from_json(out)
    assert code == 0 and cert.r == 8
    assert PeriodCertificate.from_json(cert.to_json()) == cert
    assert json.loads(run(["period", *EX1, "-p", "7"])[1])["r"] == 9
    code, _, err = run(["period", *EX1, "-p", "37"])
    assert code == 3 and "singular reduction" in err


def test_limit():
    code, out, _ = run(["limit", *EX1, "-p", "7", "-m", "9", "--mu", "4"])
    cert = LimitCertificate.from_json(out)
    assert code == 0 and cert.vanishing
    assert json.loads(cert.to_json()) == json.loads(out)
    code, out, _ = run(["limit", *EX1, "-p", "7", "-m", "1", "--mu", "4"])
    d = json.loads(out)
    assert not d["vanishing"] and d["k_stable"] >= 2
    assert set(d) == {"p", "m", "mu", "e", "q", "r", "r_prime", "t", "value", "k_stable",
                      "vanishing", "crosscheck"}
    code, _, err = run(["limit", *EX1, "-p", "3", "-m", "1", "--mu", "3"])
    refusal = json.loads(err)
    assert code == 3 and refusal["classification"]["supersingular"]
    code, _, err = run(["limit", *EX1, "-p", "3", "-m", "1", "--mu", "3", "--gamma", "1"])
    assert code == 3 and json.loads(err)["reason"] == "InadmissiblePrime"


def test_divpoly_eval():
    code, out, _ = run(["divpoly", "eval", *EX1, "--n", "18"])
    assert json.loads(out)["value"] == "-3689"
    code, out, _ = run(["divpoly", "eval", *EX1, "--n", "8", "-p", "5", "--mu", "1"])
    assert json.loads(out)["value"] == "0"


def test_usage_errors():
    code, _, err = run(["verify", "--bogus"])
    assert code == 64 and "usage" in err
    assert run([])[0] == 64
    assert run(["period", *EX1])[0] == 64


def test_verify_fast_and_seed():
    code, out, _ = run(["verify", "--fast", "--seed", "42"])
    assert code == 0
    lines = out.splitlines()
    assert lines and all(ln.startswith("[PASS]") for ln in lines)
    again = run(["verify", "--fast", "--seed", "42"])[1].splitlines()
    strip = [ln.split(":")[0] + ln.split("s  ", 1)[1] for ln in lines]
    assert strip == [ln.split(":")[0] + ln.split("s  ", 1)[1] for ln in again]


def test_batch(tmp_path):
    jobs = tmp_path / "jobs.txt"
    jobs.write_text(
        "# comment\n"
        'eds gen --w 1 -1 1 --n 5\n'
        'period --curve "0 0 1 -1 0" --point "0 0" -p 37\n'
        'period --curve "0 0 1 -1 0" --point "0 0" -p 5\n'
    )
    for n in (1, 2):
        code, out, _ = run(["--batch", str(jobs), "--jobs", str(n)])
        lines = out.splitlines()
        assert code == 3 and len(lines) == 3
        assert lines[0] == "0 1 1 -1 1 2"
        assert json.loads(lines[1])["exit"] == 3
        assert json.loads(lines[2])["r"] == 8


def test_console_entry(capsys):
    assert main(["eds", "gen", "--w", "1", "-1", "1", "--n", "3"]) == 0
    assert capsys.readouterr().out.strip() == "0 1 1 -1"
    proc = subprocess.run([sys.executable, "-m", "edslab", "eds", "gen", "--w", "1", "-1", "1", "--n", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "0 1"
