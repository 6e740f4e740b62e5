"""Smoke tests for the python bindings: exact values only, no tolerances."""

from fractions import Fraction

import qhs


def frac(s):
    return Fraction(s)


def test_complete_params_matches_the_example():
    p = qhs.complete_params("1", "-1", "0")
    assert p == {"a": "0", "b": "1", "c": "-1/2", "d": "0", "a1": "1", "a2": "-1", "a3": "0"}


def test_complete_params_general_point():
    p = qhs.complete_params("0", "0", "2")
    assert frac(p["a"]) == 1
    assert frac(p["b"]) == 0
    assert frac(p["c"]) == 0
    assert qhs.jacobi_defect("0", "0", "2") == "0"


def test_family_verify_report():
    rep = qhs.family_verify("1", "-1", "0")
    assert rep["ok"] is True
    assert rep["schema"] == 1
    by_name = {c["name"]: c for c in rep["checks"]}
    assert by_name["jacobi-defect"]["status"] == "pass"
    assert by_name["symmetry"]["details"]["verdict"] == "non-symmetric"
    assert by_name["symmetry"]["details"]["complement_family_dim"] == 1


def test_family_verify_full_rejects_nonzero_d():
    rep = qhs.family_verify_full(["0", "1", "-1/2", "1", "1", "-1", "0"])
    assert rep["ok"] is False


def test_symmetry_status():
    sym = qhs.symmetry_status("0", "0", "0")
    assert sym["status"] == "symmetric"
    non = qhs.symmetry_status("1", "-1", "0")
    assert non["status"] == "non-symmetric"
    assert non["imaginary_block_in_every_complement"] is True


def test_paper_system_arity():
    sys = qhs.paper_system()
    assert len(sys) == 5
    assert "d" in sys


def test_goursat_demo():
    rep = qhs.goursat(demo=True)
    assert rep["ok"] is True
    assert len(rep["checks"]) == 3


def test_fourform_counts():
    rep = qhs.fourform(n=1)
    assert rep["ok"] is True
    gen = next(c for c in rep["checks"] if c["name"] == "generator-invariance")
    assert gen["details"]["generators_checked"] == 13
    assert gen["details"]["zero_defects"] == 13


def test_lemma31_n2_dimension():
    rep = qhs.lemma31(n=2)
    assert rep["ok"] is True
    assert rep["checks"][0]["details"]["dimension"] == 40


def test_sweep_single_point():
    out = qhs.sweep("a1=1;a2=-1;a3=0")
    assert out["report"]["ok"] is True
    assert len(out["rows"]) == 1
    assert out["rows"][0]["verdict"] == "non-symmetric"
