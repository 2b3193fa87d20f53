import pathlib
import subprocess
import sys

import pytest

from mersinv.cli import main

sys.path.insert(0, str(pathlib.Path(__file__).parent / "fixtures"))
from regenerate import CLI_FIXTURES, capture, normalize_bench  # noqa: E402

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.mark.parametrize("name", sorted(CLI_FIXTURES))
def test_golden_output(name):
    assert capture(CLI_FIXTURES[name]) == (FIXTURES / name).read_text()


def test_bench_golden_shape():
    got = normalize_bench(capture(
        ["bench", "--d", "13", "--nmax", "100", "--step", "50", "--runs", "3"]))
    assert got == (FIXTURES / "cli_bench_13.txt").read_text()


def test_bench_skips_non_invertible():
    out = capture(["bench", "--d", "13", "--nmax", "24", "--step", "12", "--runs", "1"])
    assert "n=12\nskipped=not invertible" in out
    assert "n=24\nskipped=not invertible" in out


def test_invert_value_remultiplies_to_one(capsys):
    assert main(["invert", "--d", "9", "--n", "11"]) == 0
    lines = dict(line.split("=", 1) for line in capsys.readouterr().out.splitlines())
    assert int(lines["d"]) * int(lines["value"]) % (2 ** int(lines["n"]) - 1) == 1


def test_not_invertible_exit_code(capsys):
    assert main(["invert", "--d", "3", "--n", "2"]) == 1
    err = capsys.readouterr().err
    assert "not invertible" in err and "gcd = 3" in err


def test_domain_error_exit_code(capsys):
    assert main(["family", "--name", "welch", "--k", "2", "--n", "7"]) == 2
    assert "error:" in capsys.readouterr().err


def test_walsh_on_even_n_is_usage_error(capsys):
    assert main(["apn-check", "--d", "3", "--n", "6", "--walsh"]) == 2


def test_structure_even_d_is_domain_error(capsys):
    assert main(["structure", "--d", "6", "--n", "5"]) == 2


def test_apn_check_field_range(capsys):
    assert main(["apn-check", "--d", "3", "--n", "20"]) == 2


def test_walsh_cap_is_usage_error_without_override(capsys):
    assert main(["apn-check", "--d", "3", "--n", "13", "--walsh"]) == 2


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as err:
        main(["invert", "--d", "3", "--n", "5", "--bogus"])
    assert err.value.code == 2


def test_unknown_subcommand_rejected():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mersinv.cli", "invert", "--d", "13", "--n", "5"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "value=12" in proc.stdout
