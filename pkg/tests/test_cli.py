"""End-to-end command line checks via subprocess."""

import json
import subprocess
import sys

import pytest

QS_TABLE = """
mode: qshuffle
alphabet: x1:1, x2:2, x3:3
x1 * x1 = x2
x1 * x2 = x3
x2 * x1 = x3
x2 * x2 = x3
x1 * x3 = x3
x3 * x1 = x3
x2 * x3 = x3
x3 * x2 = x3
x3 * x3 = x3
"""

FLALG_TABLE = """
mode: explicit
alphabet: a:1, b:2
bound: 6
a , a -> 2*b
"""


def run(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "gebra", *argv],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def run_ok(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    assert err == ""
    return out


def test_pinned_lambda_output():
    assert run_ok("topo", "lambda", "2; 1<2") == "-1/2\n"


def test_pinned_shuffle_output():
    assert run_ok("shuffle", "a", "a") == "2*a.a\n"


def test_pinned_upsilon_output():
    assert run_ok("topo", "upsilon", "3; 1<3, 2<3") == "2X^2+X\n"


def test_json_schema():
    out = run_ok("topo", "lambda", "2; 1<2", "--json")
    assert json.loads(out) == {"terms": [{"coeff": "-1/2", "basis": "1"}]}
    out = run_ok("shuffle", "a", "b", "--json")
    data = json.loads(out)
    assert set(data) == {"terms"}
    for term in data["terms"]:
        assert set(term) == {"coeff", "basis"}
        assert term["coeff"] == "1"
    assert [t["basis"] for t in data["terms"]] == ["a.b", "b.a"]
    out = run_ok("topo", "upsilon", "3; 1<3, 2<3", "--json")
    assert json.loads(out) == {
        "terms": [{"coeff": "2", "basis": "X^2"}, {"coeff": "1", "basis": "X"}]
    }


def test_output_is_deterministic(tmp_path):
    tbl = tmp_path / "qs.tbl"
    tbl.write_text(QS_TABLE)
    for argv in (
        ("topo", "eulerian", "4; 1<2, 1<3, 1<4"),
        ("desc", "solomon", "4"),
        ("qshuffle", "--table", str(tbl), "x1.x2", "x1"),
        ("topo", "delta2", "3; 3<1, 3<2", "--json"),
    ):
        first = run(*argv)
        second = run(*argv)
        assert first == second
        assert first[0] == 0


def test_qshuffle_needs_a_table():
    code, out, err = run("qshuffle", "x1", "x1")
    assert code == 2
    assert out == ""
    assert "error:" in err


def test_table_file_quasi_shuffle(tmp_path):
    tbl = tmp_path / "qs.tbl"
    tbl.write_text(QS_TABLE)
    out = run_ok("qshuffle", "--table", str(tbl), "x1", "x1")
    assert out == "x2 + 2*x1.x1\n"
    out = run_ok("eulerian", "--table", str(tbl), "x1.x2")
    assert out == "-1/2*x3 + 1/2*x1.x2 + -1/2*x2.x1\n"
    out = run_ok("varpi", "--table", str(tbl), "x1.x2")
    assert out == "-1/2*x3\n"
    assert run_ok("hoffman", "log", "--table", str(tbl), "x1.x1") == run_ok(
        "varpi", "--table", str(tbl), "x1.x1"
    )


def test_table_file_explicit(tmp_path):
    tbl = tmp_path / "fl.tbl"
    tbl.write_text(FLALG_TABLE)
    out = run_ok("binf", "prod", "--table", str(tbl), "a", "a")
    assert out == "2*b + 2*a.a\n"
    out = run_ok("binf", "check", "--table", str(tbl), "--budget", "4")
    assert out == "unit: pass\nassoc: pass\ncomm: pass\ntrivial: fail\n"


def test_binf_check_shuffle_report():
    out = run_ok("binf", "check", "--alphabet", "a,b", "--budget", "3")
    assert out == "unit: pass\nassoc: pass\ncomm: pass\ntrivial: pass\n"


def test_omega_zeta_roundtrip(tmp_path):
    tbl = tmp_path / "qs.tbl"
    tbl.write_text(QS_TABLE)
    image = run_ok("omega", "--table", str(tbl), "x1.x2").strip()
    back = run_ok("zeta", "--table", str(tbl), image)
    assert back == "x1.x2\n"


def test_desc_outputs():
    assert run_ok("desc", "dynkin", "3") == "1 2 3 + -1*2 1 3 + -1*3 1 2 + 3 2 1\n"
    assert run_ok("desc", "solomon", "2") == "1/2*1 2 + -1/2*2 1\n"
    assert run_ok("desc", "conv", "1 2", "1") == "1 2 3 + 1 3 2 + 2 3 1\n"


def test_desc_check_report():
    out = run_ok("desc", "check", "3")
    lines = out.splitlines()
    assert lines[0] == "solomon_idempotent: pass"
    assert all(line.endswith(": pass") for line in lines)
    assert any(line.startswith("dynkin_lie_valued") for line in lines)


def test_topo_outputs():
    assert run_ok("topo", "ladder", "3") == "3; 2<1, 3<1, 3<2 (l3)\n"
    assert run_ok("topo", "corolla", "4") == "4; 4<1, 4<2, 4<3 (c4)\n"
    assert (
        run_ok("topo", "delta", "2; 1<2")
        == "1 (x) l2 + disc1 (x) disc1 + l2 (x) 1\n"
    )
    assert (
        run_ok("topo", "eulerian", "4; 1<2, 1<3, 1<4")
        == "1/2*[4; 4<3] + -3/2*[4; 4<2, 4<3] + c4\n"
    )
    assert run_ok("topo", "pi", "2") == "disc2 + -2*l2\n"


def test_size_bound_exit_code():
    for argv in (
        ("topo", "lambda", "9; 1<2"),
        ("desc", "dynkin", "8"),
        ("topo", "eulerian", "7; 1<2"),
    ):
        code, out, err = run(*argv)
        assert code == 3
        assert out == ""
        assert err.startswith("error:")


def test_malformed_input_exit_code():
    for argv in (
        ("topo", "lambda", "2; 1*2"),
        ("shuffle", "a..b", "a"),
        ("desc", "conv", "1 3", "1"),
        ("topo", "upsilon", "0"),
        ("hoffman", "log", "--alphabet", "a,b", "a.b"),
    ):
        code, out, err = run(*argv)
        assert code == 2, argv
        assert out == ""
        assert err.startswith("error:")


def test_unknown_subcommand_exits_2():
    code, out, err = run("frobnicate")
    assert code == 2
    assert out == ""
    assert err != ""


def test_no_arguments_exits_2():
    code, out, err = run()
    assert code == 2
