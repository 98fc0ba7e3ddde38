import itertools
import json
import subprocess
import sys
from math import gcd

import pytest

from zolotarev.cli import main, parse_ascii, render_ascii
from zolotarev.deals import make_deal


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_deal_row(capsys):
    code, out, _ = run(capsys, "deal", "-m", "3", "-n", "5", "--kind", "row")
    assert code == 0
    assert [line.split() for line in out.splitlines()] == [
        ["0", "1", "2", "3", "4"],
        ["5", "6", "7", "8", "9"],
        ["10", "11", "12", "13", "14"],
    ]
    assert out.splitlines()[0] == " 0  1  2  3  4"


def test_deal_diag_non_coprime(capsys):
    code, out, err = run(capsys, "deal", "-m", "3", "-n", "6", "--kind", "diag")
    assert code == 2 and out == "" and "gcd" in err


def test_deal_zigzag(capsys):
    code, out, _ = run(capsys, "deal", "--modulus", "5", "--kind", "zigzag")
    assert code == 0 and out == "2 4\n1 3\n"


def test_deal_json(capsys):
    code, out, _ = run(capsys, "deal", "-m", "3", "-n", "5", "--kind", "diag", "--format", "json")
    assert json.loads(out)["cells"] == [[0, 6, 12, 3, 9], [10, 1, 7, 13, 4], [5, 11, 2, 8, 14]]


@pytest.mark.parametrize("argv", [["deal", "--kind", "zigzag"], ["deal", "--kind", "row", "-m", "3"], ["deal", "--modulus", "4", "--kind", "zigzag"]])
def test_deal_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_perm_queries(capsys):
    assert run(capsys, "perm", "--from", "row", "--to", "col", "-m", "3", "-n", "5", "--sign")[1] == "+1\n"
    code, out, _ = run(capsys, "perm", "--from", "row", "--to", "diag", "-m", "3", "-n", "5", "--cycles")
    assert code == 0 and "(7)" in out
    assert out.strip() == "(0)(1 6)(2 12)(3)(4 9)(5 10)(7)(8 13)(11)(14)"
    assert run(capsys, "perm", "--from", "row", "--to", "row", "-m", "2", "-n", "2", "--inversions")[1] == "0\n"


def test_perm_supplement_labels(capsys):
    code, out, _ = run(capsys, "perm", "--from", "row", "--to", "zigzag", "--modulus", "7", "--image")
    assert out.strip() == "1->2 2->4 3->6 4->1 5->3 6->5"
    code, out, _ = run(capsys, "perm", "--from", "row", "--to", "modzigzag", "--modulus", "7", "--sign")
    assert out == "-1\n"  # m = 3


def test_perm_all_queries(capsys):
    code, out, _ = run(capsys, "perm", "--from", "row", "--to", "col", "-m", "2", "-n", "2")
    assert out.splitlines() == ["image: 0->0 1->2 2->1 3->3", "cycles: (0)(1 2)(3)", "inversions: 1", "sign: -1"]


def test_perm_mismatched_deals(capsys):
    assert run(capsys, "perm", "--from", "row", "--to", "diag", "-m", "4", "-n", "6")[0] == 2


def test_symbol(capsys):
    assert run(capsys, "symbol", "--zolotarev", "2", "5")[1] == "-1\n"
    assert run(capsys, "symbol", "--jacobi", "2", "15")[1] == "1\n"
    assert run(capsys, "symbol", "--legendre", "4", "7")[1] == "1\n"
    assert run(capsys, "symbol", "--jacobi", "3", "9")[1] == "0\n"
    assert run(capsys, "symbol", "--legendre", "--method", "brute", "2", "5")[1] == "-1\n"
    assert run(capsys, "symbol", "--jacobi", "--method", "factored", "2", "15")[1] == "1\n"


@pytest.mark.parametrize(
    "argv, message",
    [
        (["--legendre", "2", "9"], "prime"),
        (["--jacobi", "2", "10"], "even"),
        (["--zolotarev", "3", "9"], "gcd"),
        (["--zolotarev", "--method", "brute", "2", "5"], "method"),
    ],
)
def test_symbol_errors(capsys, argv, message):
    code, out, err = run(capsys, "symbol", *argv)
    assert code == 2 and message in err


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max", "31", "--primes", "199")
    assert code == 0
    assert out.count("PASS") == 9


def test_verify_rejects_empty_range(capsys):
    assert run(capsys, "verify", "--suite", "gamma", "--max", "0")[0] == 2


def test_verify_report_file(capsys, tmp_path):
    path = tmp_path / "out.json"
    code, _, _ = run(capsys, "verify", "--suite", "lemma", "--primes", "997", "--report", str(path))
    assert code == 0
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["suite"] == "zolotarev_lemma" and data["failures"] == [] and data["checks_run"] > 0


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "gamma", "--max", "6", "--inject-fault", "gamma:3,5")
    assert code == 1
    assert "m': 3, 'n': 5" in out


def test_bench_signs_table(capsys):
    code, out, _ = run(capsys, "bench", "--suite", "signs", "--sizes", "1000,100000", "--repetitions", "1")
    assert code == 0
    assert len(out.splitlines()) == 3


def test_bench_jacobi(capsys, tmp_path):
    path = tmp_path / "bench.json"
    code, out, _ = run(capsys, "bench", "--suite", "jacobi", "--max", "10000", "--repetitions", "1", "--report", str(path))
    assert code == 0
    header, row = out.splitlines()
    assert all(name in header for name in ("zolotarev_permutation", "jacobi_factored", "jacobi_reciprocity"))
    data = json.loads(path.read_text())
    assert data["failures"] == [] and len({r["checksum"] for r in data["results"]}) == 1


def test_bench_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        main(["bench", "--suite", "nosuch"])
    assert exc.value.code == 2


def deals_upto_12():
    for m, n in itertools.product(range(1, 13), repeat=2):
        yield make_deal("row", m, n)
        yield make_deal("col", m, n)
        if gcd(m, n) == 1:
            yield make_deal("diag", m, n)
    for n in range(3, 26, 2):
        for kind in ("row", "col", "zigzag", "modzigzag"):
            yield make_deal(kind, modulus=n)


def test_render_parse_round_trip():
    for deal in deals_upto_12():
        text = render_ascii(deal)
        lines = text.splitlines()
        assert len({len(line) for line in lines}) == 1  # rectangular
        assert parse_ascii(text) == deal


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zolotarev", "symbol", "--zolotarev", "2", "5"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "-1\n"
    proc = subprocess.run([sys.executable, "-m", "zolotarev", "deal", "-m", "3", "-n", "6", "--kind", "diag"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr
