import subprocess
import sys

import pytest

from rookharmonics.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def test_grfrob_text(capsys):
    code, lines, _ = run(capsys, "grfrob", "--n", "2", "--m", "2", "--r", "1", "--method", "signed")
    assert code == 0
    assert lines == [
        "q^0  s[2]*s[2]  1",
        "q^1  s[2]*s[1,1]  1",
        "q^1  s[1,1]*s[2]  1",
        "q^1  s[1,1]*s[1,1]  1",
    ]


@pytest.mark.parametrize("method", ["signed", "bad", "good"])
def test_methods_print_identically(capsys, method):
    _, lines, _ = run(capsys, "grfrob", "--n", "3", "--m", "2", "--r", "2", "--method", method)
    _, reference, _ = run(capsys, "grfrob", "--n", "3", "--m", "2", "--r", "2")
    assert lines == reference


def test_records_format(capsys):
    _, lines, _ = run(capsys, "--format", "records", "grfrob", "--n", "2", "--m", "2", "--r", "1")
    assert lines[-1] == "kind=term q=1 l1=[1,1] l2=[1,1] c=1"
    _, after, _ = run(capsys, "grfrob", "--n", "2", "--m", "2", "--r", "1", "--format", "records")
    assert after == lines


def test_hilbert_outputs(capsys):
    assert run(capsys, "grfrob", "--n", "3", "--m", "3", "--r", "2", "--hilbert")[1] == ["1 + 8q + 9q^2"]
    assert run(capsys, "hilbert", "--n", "2", "--m", "2", "--r", "1")[1] == ["1 + 3q"]
    assert run(capsys, "hilbert", "--n", "3", "--a", "1")[1] == ["1 + 2q"]
    assert run(capsys, "--format", "records", "hilbert", "--n", "2", "--m", "2", "--r", "1")[1] == [
        "kind=hilbert q=0 c=1",
        "kind=hilbert q=1 c=3",
    ]


def test_involution(capsys):
    assert run(capsys, "grfrob-involution", "--n", "3", "--a", "1")[1] == ["q^0  s[3]  1", "q^1  s[2,1]  1"]


def test_loci(capsys):
    assert run(capsys, "loci", "count", "--type", "rook", "--n", "4", "--m", "4", "--r", "4")[1] == ["24"]
    assert run(capsys, "loci", "count", "--type", "uz", "--n", "2", "--m", "2", "--r", "1")[1] == ["6"]
    assert run(capsys, "loci", "count", "--type", "involution", "--n", "4", "--a", "0")[1] == ["3"]
    listed = run(capsys, "loci", "list", "--n", "2", "--m", "2", "--r", "2")[1]
    assert listed == ["{(1,1),(2,2)}", "{(1,2),(2,1)}"]


def test_paths_show(capsys):
    code, lines, _ = run(capsys, "paths", "show", "--mu", "[6,3,1]", "--lam1", "[6,5,2]", "--lam2", "[6,4,3]", "--length", "7")
    assert code == 0
    assert lines[0] == "x=1 step=SE h=-1"
    assert lines[6] == "x=7 step=SE h=-1"
    assert lines[7:] == ["pairs (2,7) (4,6)", "width 7"]


def test_oracle(capsys):
    code, lines, _ = run(capsys, "oracle", "grfrob", "--type", "rook", "--n", "2", "--m", "2", "--r", "1")
    assert code == 0
    assert lines == run(capsys, "grfrob", "--n", "2", "--m", "2", "--r", "1")[1]
    assert run(capsys, "oracle", "grfrob", "--type", "involution", "--n", "4", "--a", "0")[1] == [
        "q^0  s[4]  1",
        "q^1  s[2,2]  1",
    ]
    assert run(capsys, "oracle", "grfrob", "--n", "3", "--m", "3", "--r", "2", "--hilbert")[1] == ["1 + 8q + 9q^2"]


def test_verify_commands(capsys):
    assert run(capsys, "verify", "bijections", "--n", "4", "--m", "4")[1] == ["CHECK phi PASS", "CHECK ls PASS"]
    code, lines, _ = run(capsys, "verify", "ideal", "--n", "2", "--m", "2", "--r", "1", "--dmax", "2")
    assert code == 0 and lines[-1] == "CHECK ideal PASS"
    code, lines, _ = run(capsys, "verify", "ideal", "--n", "4", "--a", "2")
    assert code == 0 and lines[-1] == "CHECK ideal PASS"
    for what in ("identities", "chain", "isom", "uz"):
        code, lines, _ = run(capsys, "verify", what, "--n", "3", "--m", "3")
        assert code == 0 and lines and all(" PASS" in line for line in lines), what


def test_conjecture_jobs_keep_order(capsys):
    serial = run(capsys, "conjecture", "logconcavity", "--n", "3", "--m", "3")
    parallel = run(capsys, "conjecture", "logconcavity", "--n", "3", "--m", "3", "--jobs", "2")
    assert serial == parallel
    assert serial[0] == 0
    assert serial[1][0].startswith("CHECK logconcave[n=3,m=3,r=2,d=1] PASS")


def test_conjecture_without_interior_degrees(capsys):
    code, lines, _ = run(capsys, "conjecture", "logconcavity", "--n", "2", "--m", "2", "--r", "1")
    assert code == 0 and lines == ["no interior degrees to check"]


def test_selftest_subset(capsys):
    code, lines, _ = run(capsys, "selftest", "--criteria", "1", "7")
    assert code == 0
    assert [line.split(":")[0] for line in lines] == [
        "PASS criterion 1 (triple formula agreement)",
        "PASS criterion 7 (involution formula)",
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ["grfrob", "--n", "2"],
        ["bogus"],
        ["grfrob", "--n", "2", "--m", "2", "--r", "5"],
        ["grfrob", "--n", "-1", "--m", "2", "--r", "0"],
        ["grfrob-involution", "--n", "4", "--a", "1"],
        ["paths", "show", "--mu", "[1,2]", "--lam1", "[2]", "--lam2", "[2]"],
        ["paths", "show", "--mu", "[]", "--lam1", "[1,1]", "--lam2", "[2]"],
        ["loci", "count", "--n", "2"],
        ["selftest", "--criteria", "11"],
        [],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, lines, err = run(capsys, *argv)
    assert code == 2
    assert lines == []
    assert "error" in err


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "rookharmonics", "loci", "count", "--n", "3", "--m", "3", "--r", "2"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0 and out.stdout == "18\n"


def test_output_is_stable(capsys):
    first = run(capsys, "grfrob", "--n", "4", "--m", "3", "--r", "2")
    second = run(capsys, "grfrob", "--n", "4", "--m", "3", "--r", "2")
    assert first == second


def test_failed_verification_exits_one(capsys, monkeypatch):
    from rookharmonics import cli
    from rookharmonics.lattice import BijectionReport

    broken = BijectionReport("phi", failures=["planted failure"])
    monkeypatch.setattr(cli, "check_phi", lambda n, m: broken)
    code, lines, _ = run(capsys, "verify", "bijections", "--n", "2", "--m", "2")
    assert code == 1
    assert lines[0] == "CHECK phi FAIL planted failure"


def test_budget_guard(capsys):
    code, _, err = run(capsys, "conjecture", "logconcavity", "--n", "8", "--m", "10")
    assert code == 2 and "--max-size" in err
    code, lines, _ = run(capsys, "conjecture", "logconcavity", "--n", "7", "--m", "2", "--r", "2", "--max-size", "7")
    assert code == 0 and lines[0].startswith("CHECK logconcave[n=7,m=2,r=2,d=1] PASS")
