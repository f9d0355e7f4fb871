import json
import os
import subprocess

import pytest

import toricode as tc


def test_field_arithmetic():
    f = tc.Field(7)
    assert f.q == 7
    assert f.generator == 3
    assert f.units() == [1, 3, 2, 6, 4, 5]
    assert f.mul(3, 5) == 1
    f4 = tc.Field(2, 2)
    assert f4.modulus == [1, 1, 1]
    with pytest.raises(tc.ToricodeError):
        tc.Field(4)


def test_polytopes():
    p = tc.lawrence_prism([1, 2, 3])
    assert p.lattice_point_count == 9
    assert p.is_degree_one()
    assert p.h_star() == [1, 5, 0, 0]
    assert tc.pyramid(p).lattice_point_count == 10
    d2 = tc.exceptional_simplex()
    assert d2.normalized_volume() == 4
    assert d2.codim() == 3
    assert tc.interval(2).lattice_point_count == 4
    with pytest.raises(tc.ToricodeError):
        tc.lawrence_prism([2, 1])


def test_codes():
    f5 = tc.Field(5)
    code = tc.primal_code(tc.exceptional_simplex(), f5)
    assert (code.length, code.rank) == (16, 6)
    assert tc.dmin_primal_bruteforce(code) == 8
    em = tc.evaluation_matrix(tc.interval(1), tc.Field(7))
    assert (em.rows, em.cols) == (6, 3)
    assert tc.dmin_dual(em, 8) == (4, True)
    assert tc.f_s(em, [0, 1, 2, 3]) == 6
    assert tc.f_s(em, [0, 1, 2, 3]) == tc.f_s_enumerate(em, [0, 1, 2, 3])
    assert tc.r_s(em, [0, 1, 2, 3]) == 1


def test_stats():
    f7 = tc.Field(7)
    em = tc.evaluation_matrix(tc.lawrence_prism([1, 1]), f7)
    rep = tc.mode(em, 2)
    assert rep["mode"] == 4
    assert rep["exhaustive"]
    assert tc.w_s(em, [0, 1]) in (3, 4)
    num, den, exhaustive = tc.generic_fraction(tc.interval(1), f7)
    assert (num, den, exhaustive) == (30, 36, True)
    rel = tc.relative_mode(tc.lawrence_prism([1, 1]), tc.Field(5), 2, 2)
    assert rel["mode"] == 4


def test_formulas():
    pred = tc.degree_one_params(7, a=[1, 2, 3])
    assert (pred["n"], pred["k"], pred["dmin"]) == (216, 9, 108)
    assert tc.dual_dmin_predicted(delta2=True) == 4
    assert tc.dual_dmin_predicted(a=[1, 1]) == 3
    assert tc.mode_predicted(tc.exceptional_simplex())[0] == 6
    checks = tc.verify_table1()
    assert len(checks) == 7
    assert all(c["match"] for c in checks)


CLI = os.environ.get("TORICODE_CLI")


@pytest.mark.skipif(CLI is None, reason="TORICODE_CLI not set")
def test_cli_reports_and_determinism():
    out = subprocess.run(
        [CLI, "code", "params", "--lawrence", "1", "2", "3", "--q", "7"],
        capture_output=True, text=True, check=True,
    )
    rep = json.loads(out.stdout)
    assert (rep["n"], rep["k"], rep["dmin_formula"]) == (216, 9, 108)

    cmd = [CLI, "stats", "mode", "--delta2", "--q", "7", "--s", "4",
           "--samples", "200", "--seed", "11"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b

    verify = subprocess.run([CLI, "verify", "--table1"], capture_output=True, text=True)
    assert verify.returncode == 0
    rows = [json.loads(line) for line in verify.stdout.splitlines()]
    assert len(rows) == 7 and all(r["match"] for r in rows)
