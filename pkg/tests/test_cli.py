import subprocess
import sys

import pytest

from conftest import MATRIX_000101
from rule110tm.cli import main
from rule110tm.words import TM_ALPHABET, parse_word

TRIPLE = ["--left", "111011", "--input", "10011", "--right", "1101"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_seeds(capsys):
    code, out, _ = run(capsys, "seeds", "--left", "111011", "--right", "1101")
    assert code == 0
    assert out.splitlines() == ["left_stem=", "left_seed=11i0o0i011", "right_stem=ii", "right_seed=o1"]
    for line in out.splitlines():
        parse_word(line.split("=", 1)[1], TM_ALPHABET)


def test_seeds_needs_a_word(capsys):
    code, _, err = run(capsys, "seeds")
    assert code == 64 and "--left" in err


def test_run_wrapped(capsys):
    code, out, _ = run(capsys, "run-wrapped", "--word", "000101", "--show-alpha-delta")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "alpha=3 delta=9 beta=12"
    assert tuple(lines[1:]) == MATRIX_000101


def test_run_ca(capsys):
    code, out, _ = run(capsys, "run-ca", *TRIPLE, "--steps", "2")
    assert code == 0
    assert out.splitlines()[0] == "11" + "10011" + "11"
    assert out.splitlines()[2] == "111111011"
    code, out, _ = run(capsys, "run-ca", *TRIPLE, "--steps", "2", "--emphasis")
    assert out.splitlines() == ["11[10011]11", "1[0101100]1", "[111111011]"]


def test_run_tm_summary(capsys):
    code, out, _ = run(capsys, "run-tm", *TRIPLE, "--switches", "3")
    assert code == 0
    assert out.splitlines() == ["left_switches=3", "switch_times=3,29,63", "heads=8,10,12"]


def test_run_tm_ascii_rows_reparse(capsys):
    code, out, _ = run(capsys, "run-tm", *TRIPLE, "--switches", "3", "--render", "ascii")
    assert code == 0 and len(out.splitlines()) == 3
    for line in out.splitlines():
        parse_word(line, TM_ALPHABET)


def test_run_tm_budget(capsys):
    code, _, err = run(capsys, "run-tm", *TRIPLE, "--switches", "5", "--max-steps", "10")
    assert code == 2 and "budget" in err


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", *TRIPLE, "--horizon", "12")
    assert code == 0
    assert out.splitlines() == ["verdict=PASS", "horizon=12", "checked_events=221"]


def test_verify_wolfram(capsys):
    code, out, _ = run(capsys, "verify", "--wolfram", "--input", "111011", "--horizon", "3")
    assert code == 0 and out.startswith("verdict=PASS")


def test_verify_fail_exit_code(capsys, monkeypatch):
    import rule110tm.cli as cli
    from rule110tm.verifier import VerificationReport

    monkeypatch.setattr(cli, "verify_emulation",
                        lambda *a, **k: VerificationReport(1, 3, 12, (1, 0, 1, "0")))
    code, out, _ = run(capsys, "verify", *TRIPLE, "--horizon", "1")
    assert code == 1
    assert out.splitlines()[-1] == "first_mismatch=t=1 c=0 ca=1 tm=0"


def test_domain_errors(capsys):
    code, _, err = run(capsys, "seeds", "--left", "11")
    assert code == 2 and "AllZeroRow" in err
    code, _, err = run(capsys, "verify", "--left", "111", "--input", "1", "--right", "01")
    assert code == 2 and "PreconditionViolated" in err


def test_bad_character(capsys):
    code, _, err = run(capsys, "verify", "--left", "111011", "--input", "10a11", "--right", "1101")
    assert code == 64
    assert "'a'" in err and "position 2" in err and "--input" in err


def test_usage_errors_exit_64(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 64
    with pytest.raises(SystemExit) as info:
        main(["verify", "--horizon", "many"])
    assert info.value.code == 64


def test_fuzz(capsys):
    code, out, _ = run(capsys, "fuzz", "--count", "5", "--horizon", "10")
    assert code == 0
    assert out.splitlines() == ["cases=5", "passes=5", "failures=0"]


@pytest.mark.parametrize("command", [None, "seeds", "run-ca", "run-wrapped", "run-tm", "verify", "fuzz", "render"])
def test_help(capsys, command):
    argv = ["--help"] if command is None else [command, "--help"]
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 0
    assert "usage" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rule110tm", "seeds", "--right", "1101"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["right_stem=ii", "right_seed=o1"]
