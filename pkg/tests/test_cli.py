import subprocess
import sys

import pytest

from golden import COUNT_TABLES
from primesums.cli import main, parse_x


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_x_exact():
    assert parse_x("23") == 23
    assert parse_x("1e38") == 10 ** 38
    assert parse_x("2e7") == 2 * 10 ** 7
    assert parse_x("e5") == 10 ** 5
    assert parse_x("1000000000000000000000") == 10 ** 21
    for bad in ("abc", "1.5e3", "-4", "2e-3", ""):
        with pytest.raises(ValueError):
            parse_x(bad)


def test_count_worked_example(capsys):
    code, out, _ = run_cli(capsys, "count", "--k", "3", "--x", "1e3")
    assert code == 0
    assert out == "1000\t3\t10\t4\t4\n"


def test_count_csv_and_distinct(capsys):
    code, out, _ = run_cli(
        capsys, "count", "--k", "2", "--x", "1e5", "--format", "csv", "--distinct"
    )
    assert code == 0
    header, row = out.splitlines()
    assert header == "x,k,count,max_run_length,prime_count,distinct"
    assert row == "100000,2,519,28,65,519"


def test_enumerate_empty_at_zero(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--k", "2", "--x", "0")
    assert code == 0
    assert out == ""


def test_enumerate_pairs(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--k", "3", "--x", "1e3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 10
    assert lines[0] == "8\t2"
    assert lines[-1] == "343\t7"


def test_enumerate_csv_header(capsys):
    _, out, _ = run_cli(capsys, "enumerate", "--k", "2", "--x", "100",
                        "--format", "csv")
    assert out.splitlines()[0] == "n,start_prime"
    assert out.splitlines()[1] == "4,2"


def test_enumerate_workers_byte_identical(tmp_path):
    paths = []
    for workers in ("1", "4"):
        path = tmp_path / f"w{workers}.tsv"
        code = main(["enumerate", "--k", "2", "--x", "1e5",
                     "--workers", workers, "--out", str(path)])
        assert code == 0
        paths.append(path.read_bytes())
    assert paths[0] == paths[1]
    assert paths[0].count(b"\n") == 519


def test_table_matches_reference(capsys):
    code, out, _ = run_cli(capsys, "table", "--k", "20",
                           "--from", "1e20", "--to", "1e38")
    assert code == 0
    rows = [tuple(int(v) for v in line.split("\t")) for line in out.splitlines()]
    assert rows == COUNT_TABLES[20]


def test_table_csv_header(capsys):
    _, out, _ = run_cli(capsys, "table", "--k", "2", "--from", "1e3",
                        "--to", "1e4", "--format", "csv")
    assert out.splitlines() == [
        "x,count,upper,lower",
        "1000,37,52,34",
        "10000,132,166,108",
    ]


def test_table_rejects_reversed_range(capsys):
    code, _, err = run_cli(capsys, "table", "--k", "2", "--from", "1e5",
                           "--to", "1e3")
    assert code == 1
    assert "exceeds" in err


def test_bounds_output(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--k", "2", "--x", "1e3",
                           "--format", "csv")
    assert code == 0
    header, row = out.splitlines()
    assert header == "x,k,c_k,upper,lower,m_estimate,tws_upper"
    fields = row.split(",")
    assert fields[0] == "1000" and fields[1] == "2"
    assert float(fields[3]) == pytest.approx(52.66, abs=0.01)
    _, out, _ = run_cli(capsys, "bounds", "--k", "3", "--x", "1e3",
                        "--format", "csv")
    assert "tws_upper" not in out


def test_duplicates_expanded_sums(capsys):
    code, out, _ = run_cli(capsys, "duplicates", "--k", "2", "--x", "2e7")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("14720439 = 131^2 + 137^2 +")
    assert " = 941^2 + " in lines[0]
    assert lines[0].endswith("+ 1033^2")
    assert lines[1].startswith("16535628 = 569^2 +")


def test_cross_expanded_sums(capsys):
    code, out, _ = run_cli(capsys, "cross", "--ks", "2,3", "--x", "1e5")
    assert code == 0
    line = out.strip()
    assert line.startswith("23939 = 23^2 +")
    assert line.endswith("= 17^3 + 19^3 + 23^3")


def test_cross_requires_two_exponents(capsys):
    code, _, err = run_cli(capsys, "cross", "--ks", "2", "--x", "1e5")
    assert code == 1
    assert "two distinct exponents" in err


def test_usage_errors_exit_one(capsys):
    assert run_cli(capsys, "count", "--k", "1", "--x", "10")[0] == 1
    assert run_cli(capsys, "count", "--k", "2", "--x", "abc")[0] == 1
    assert run_cli(capsys, "count", "--k", "2")[0] == 1
    assert run_cli(capsys, "bogus")[0] == 1
    assert run_cli(capsys, "count", "--k", "2", "--x", "1e40")[0] == 1


def test_resource_errors_exit_two(capsys):
    # sieving to 10^15 would need half a petabyte of flags; the budget
    # guard turns that into a clean resource failure
    code, _, err = run_cli(capsys, "count", "--k", "2", "--x", "1e30")
    assert code == 2
    assert "budget" in err


def test_out_file_unwritable_exits_two(capsys, tmp_path):
    target = tmp_path / "missing" / "out.tsv"
    code, _, err = run_cli(capsys, "count", "--k", "2", "--x", "100",
                           "--out", str(target))
    assert code == 2
    assert err != ""


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "primesums", "count", "--k", "3", "--x", "1000"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1000\t3\t10\t4\t4\n"
