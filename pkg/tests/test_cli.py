import io
import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from quivermut.canonical import canonicalize, is_isomorphic
from quivermut.cli import main
from quivermut.decider import certificate_from_dict, check_certificate
from quivermut.textio import parse_quiver, read_quiver


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def fx(name):
    return FIXTURES / f"{name}.q"


def test_mutate_markov_isomorphic():
    code, out, _ = run("mutate", fx("markov"), 0)
    assert code == 0
    assert is_isomorphic(parse_quiver(out), read_quiver(fx("markov")))


def test_mutate_involution_bytes():
    code, out, _ = run("mutate", fx("path3"), 1, 1)
    assert code == 0 and out == fx("path3").read_text()


def test_mutate_dot():
    code, out, _ = run("mutate", fx("markov"), 0, "--dot")
    assert code == 0 and out.count("->") == 6


def test_decide_markov_json():
    code, out, _ = run("decide", fx("markov"), "--json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "mutation-cyclic"
    cert = data["certificate"]
    assert cert == {"kind": "three-vertex-invariant", "vertices": [0, 1, 2],
                    "weights": [2, 2, 2], "constant": 4}
    assert check_certificate(read_quiver(fx("markov")), certificate_from_dict(cert))


@pytest.mark.parametrize("name", ["markov", "markov_plus_tail", "exhausted4",
                                  "cyclic_333", "labelled_markov"])
def test_decide_certificates_recheck(name):
    code, out, _ = run("decide", fx(name), "--json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "mutation-cyclic"
    assert check_certificate(read_quiver(fx(name)), certificate_from_dict(data["certificate"]))


def test_decide_text():
    code, out, _ = run("decide", fx("cyclic_224"))
    assert code == 0
    assert out.splitlines()[:2] == ["mutation-acyclic", "witness: 1"]


def test_decide_unknown_exit(tmp_path):
    p = tmp_path / "wild.q"
    p.write_text("4\n0 3 0 -3\n-3 0 3 0\n0 -3 0 3\n3 0 -3 0\n")
    code, out, _ = run("decide", p, "--max-quivers", 20, "--json")
    assert code == 2
    assert json.loads(out)["verdict"] == "unknown"


def test_class_outputs():
    code, out, _ = run("class", fx("path3"))
    assert code == 0 and out.startswith("forms: 4\ncomplete: true\n")
    code, out, _ = run("class", fx("path3"), "--json")
    data = json.loads(out)
    assert data["size"] == 4 and data["complete"] is True


def test_iso_and_canon():
    assert run("iso", fx("path3"), fx("path3_sink"))[1] == "false\n"
    assert run("iso", fx("markov"), fx("labelled_markov"))[1] == "true\n"
    code, out, _ = run("canon", fx("markov"))
    assert code == 0
    form = canonicalize(read_quiver(fx("markov")))
    assert out == "3\n0 -2 2\n2 0 -2\n-2 2 0\n" + f"# hash {form.hash}\n"
    assert parse_quiver(out).b == form.matrix
    data = json.loads(run("canon", fx("markov"), "--json")[1])
    assert data["hash"] == form.hash


def test_subquiver():
    code, out, _ = run("subquiver", fx("markov"), "0,1")
    assert code == 0 and out == "2\n0 2\n-2 0\n"


def test_limit_exit(tmp_path):
    p = tmp_path / "big.q"
    n = 13
    p.write_text(f"{n}\n" + "".join(" ".join(["0"] * n) + "\n" for _ in range(n)))
    assert run("canon", p)[0] == 3
    assert run("class", p)[0] == 3


def test_overflow_exit(tmp_path):
    p = tmp_path / "huge.q"
    big = 2**40
    p.write_text(f"3\n0 {big} 0\n{-big} 0 {big}\n0 {-big} 0\n")
    code, _, err = run("mutate", p, 1)
    assert code == 3 and "64-bit" in err


# Exit-status table: (argv, expected status)
EXIT_MATRIX = [
    (["mutate", fx("markov"), 0], 0),
    (["mutate", fx("markov"), 9], 1),
    (["mutate", fx("markov")], 1),
    (["mutate", fx("markov"), "x"], 1),
    (["mutate", FIXTURES / "missing.q", 0], 1),
    (["class", fx("markov"), "--max-quivers", 0], 1),
    (["decide", fx("path3")], 0),
    (["decide", fx("markov"), "--recurse-subquivers", -1], 1),
    (["decide", fx("markov"), "--recurse-subquivers", 1], 0),
    (["iso", fx("path3")], 1),
    (["canon", fx("single_vertex")], 0),
    (["subquiver", fx("markov"), "0,0"], 1),
    (["subquiver", fx("markov"), "a,b"], 1),
    (["bogus"], 1),
    ([], 1),
]


@pytest.mark.parametrize("argv,status", EXIT_MATRIX)
def test_exit_statuses(argv, status):
    assert run(*argv)[0] == status


def test_parse_error_exit(tmp_path):
    p = tmp_path / "bad.q"
    p.write_text("2\n0 1\n1 0\n")
    code, _, err = run("canon", p)
    assert code == 1 and "line 3" in err and "(1,0)" in err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "quivermut", "decide", str(fx("markov"))],
        capture_output=True, text=True,
    )
    assert res.returncode == 0
    assert res.stdout.startswith("mutation-cyclic\n")
