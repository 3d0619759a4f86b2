import json
import subprocess
import sys

import pytest

from pennant_webs.cli import main, parse_permutation
from pennant_webs.errors import InvalidInputError
from pennant_webs.setpartitions import Permutation


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


EXAMPLE_LINES = """\
pi: 1,4|2,3,6,10|5,7,8,9
tableaux: 6
+ det[1,2,3,4 | 2,3,6,10] * det[1,2,5,6 | 5,7,8,9] * det[1,2 | 1,4]
- det[1,2,3,5 | 2,3,6,10] * det[1,2,4,6 | 5,7,8,9] * det[1,2 | 1,4]
+ det[1,2,3,6 | 2,3,6,10] * det[1,2,4,5 | 5,7,8,9] * det[1,2 | 1,4]
+ det[1,2,4,5 | 2,3,6,10] * det[1,2,3,6 | 5,7,8,9] * det[1,2 | 1,4]
- det[1,2,4,6 | 2,3,6,10] * det[1,2,3,5 | 5,7,8,9] * det[1,2 | 1,4]
+ det[1,2,5,6 | 2,3,6,10] * det[1,2,3,4 | 5,7,8,9] * det[1,2 | 1,4]
terms: 6912"""


def test_invariant_example(capsys):
    status, out, _ = run(capsys, "invariant", "--n", "10", "--partition", "2,3,6,10|5,7,8,9|1,4",
                         "--block-order", "2,3,6,10|5,7,8,9|1,4")
    assert status == 0
    assert out.startswith(EXAMPLE_LINES + "\npolynomial: +1*x[1,1]")


def test_invariant_small_golden(capsys):
    status, out, _ = run(capsys, "invariant", "--n", "4", "--partition", "1,2|3,4")
    assert status == 0
    assert out == (
        "pi: 1,2|3,4\ntableaux: 1\n- det[1,2 | 1,2] * det[1,2 | 3,4]\nterms: 4\n"
        "polynomial: -1*x[1,1]*x[1,3]*x[2,4]*x[2,2] +1*x[1,1]*x[1,4]*x[2,3]*x[2,2]"
        " +1*x[1,2]*x[1,3]*x[2,4]*x[2,1] -1*x[1,2]*x[1,4]*x[2,3]*x[2,1]\n"
    )


def test_invariant_json(capsys):
    status, out, _ = run(capsys, "invariant", "--n", "4", "--partition", "1,3|2,4", "--format", "json")
    data = json.loads(out)
    assert status == 0 and data["pi"] == "1,3|2,4"
    assert data["tableaux"] == [{"sign": 1, "columns": [{"block": [1, 3], "rows": [1, 2]},
                                                        {"block": [2, 4], "rows": [1, 2]}]}]
    assert {"coeff": "1", "vars": [[1, 1, 1], [1, 2, 1], [2, 4, 1], [2, 3, 1]]} in data["polynomial"]


def test_invariant_singleton(capsys):
    status, out, _ = run(capsys, "invariant", "--n", "3", "--partition", "1|2,3")
    assert status == 0 and out.endswith("polynomial: 0\n")


def test_expand_crossing_pair(capsys):
    status, out, _ = run(capsys, "expand", "--n", "4", "--partition", "1,3|2,4")
    assert status == 0
    assert out == "target: 1,3|2,4\n-1/1  [1,4|2,3]\n-1/1  [1,2|3,4]\n"
    status, out, _ = run(capsys, "expand", "--n", "4", "--partition", "1,3|2,4", "--format", "json")
    assert json.loads(out) == {"target": "1,3|2,4", "coeffs": [{"pi": "1,4|2,3", "c": "-1/1"},
                                                               {"pi": "1,2|3,4", "c": "-1/1"}]}


def test_five_term(capsys):
    status, out, _ = run(capsys, "five-term", "--n", "4", "--A", "1", "--B", "2", "--I", "3", "--J", "4")
    assert (status, out) == (0, "residual: 0\n")
    status, out, _ = run(capsys, "five-term", "--n", "8", "--A", "1,2", "--B", "3,4", "--I", "5", "--J", "6",
                         "--fixed", "7,8", "--format", "json")
    assert status == 0 and json.loads(out) == {"n": 8, "residual": [], "zero": True}


def test_basis(capsys):
    status, out, _ = run(capsys, "basis", "--n", "4", "--d", "2")
    assert status == 0
    assert out == (
        "-1 x[1,1]*x[1,2]*x[2,4]*x[2,3]  [1,4|2,3]\n"
        "-1 x[1,1]*x[1,3]*x[2,4]*x[2,2]  [1,2|3,4]\n"
        "shape: 2,2\ndimension: 2\nstandard tableaux: 2\n"
        "leading monomials distinct: true\nverified: true\n"
    )
    status, out, _ = run(capsys, "basis", "--n", "8", "--d", "3", "--format", "json")
    data = json.loads(out)
    assert data["dimension"] == data["syt_count"] == 56 and data["verified"]


def test_act(capsys):
    status, out, _ = run(capsys, "act", "--n", "4", "--perm", "c", "--partition", "1,2|3,4")
    assert status == 0
    assert out == "w: 4,1,2,3\nw.[1,2|3,4] = -[1,4|2,3]\nverified: true\n"
    status, out, _ = run(capsys, "act", "--n", "6", "--perm", "3,1,6,2,5,4", "--partition", "1,3,5|2,4,6",
                         "--format", "json")
    assert status == 0 and json.loads(out)["verified"] is True


def test_parse_permutation_names():
    assert parse_permutation("w0", 4) == Permutation.longest(4)
    assert parse_permutation("c^2", 5) == Permutation.long_cycle(5) ** 2
    assert parse_permutation("s3", 4) == Permutation.simple(3, 4)
    with pytest.raises(InvalidInputError):
        parse_permutation("2,1", 4)


def test_tableau_dynamics(capsys):
    assert run(capsys, "promote", "--tableau", "1,2;3,4")[1] == "1,3;2,4\n"
    assert run(capsys, "promote", "--tableau", "1,2;3,4", "--steps", "2")[1] == "1,2;3,4\n"
    assert run(capsys, "evacuate", "--tableau", "1,2;2,3")[1] == "1,2;2,3\n"
    status, out, _ = run(capsys, "orbits", "--m", "2", "--q", "4", "--format", "json")
    assert status == 0 and json.loads(out) == [{"size": 2, "orbit": ["1,2;3,4", "1,3;2,4"]}]


def test_bijection_triple(capsys):
    expected = ("increasing: 1,2,3,4,6,7,8;2,3,5,6,8,9,10\nstandard: 1,4,7;2,6,10;3;5;8;9\n"
                "partition: 1,2,3,6,10|4,5|7,8,9\n")
    assert run(capsys, "bijection", "--tableau", "1,2,3,4,6,7,8;2,3,5,6,8,9,10")[1] == expected
    assert run(capsys, "bijection", "--syt", "1,4,7;2,6,10;3;5;8;9")[1] == expected
    assert run(capsys, "bijection", "--partition", "1,2,3,6,10|4,5|7,8,9")[1] == expected


@pytest.mark.parametrize("argv", [
    ["five-term", "--n", "4", "--A", "1", "--B", "2", "--I", "3", "--J", "9"],
    ["invariant", "--n", "4", "--partition", "1,2|2,3"],
    ["expand", "--n", "4", "--partition", "1|2,3,4"],
    ["promote", "--tableau", "2,1;3,4"],
    ["orbits", "--m", "2", "--q", "7"],
    ["act", "--n", "4", "--perm", "s9", "--partition", "1,2|3,4"],
])
def test_bad_input_exits_2(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 2 and out == "" and err.startswith("error:")


def test_usage_errors_exit_2(capsys):
    for argv in (["bogus"], ["basis", "--n", "4"], ["invariant", "--n", "x", "--partition", "1,2"], []):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_verify_small_bound(capsys):
    status, out, _ = run(capsys, "verify", "--n-max", "5")
    assert status == 0 and "FAIL" not in out and out.endswith("all checks passed\n")
    status, out, _ = run(capsys, "verify", "--n-max", "5", "--format", "json")
    data = json.loads(out)
    assert data["passed"] and all("seconds" not in c for c in data["checks"])


def test_output_is_deterministic(capsys):
    argv = ["basis", "--n", "7", "--d", "3", "--format", "json"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pennant_webs", "five-term", "--n", "4",
                           "--A", "1", "--B", "2", "--I", "3", "--J", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "residual: 0\n"


def test_verify_up_to_7_exits_0(capsys):
    status, out, _ = run(capsys, "verify", "--n-max", "7")
    assert status == 0 and out.count("PASS") == len(out.splitlines()) - 1


def test_failed_check_exits_1(capsys, monkeypatch):
    from pennant_webs import cli
    from pennant_webs.verify import CheckResult, SuiteReport

    monkeypatch.setattr(cli, "run_suite", lambda config: SuiteReport([CheckResult("broken", False, 1, "boom")]))
    status, out, _ = run(capsys, "verify", "--n-max", "4")
    assert status == 1 and out == "FAIL  broken: 1 cases (boom)\nSOME CHECKS FAILED\n"
