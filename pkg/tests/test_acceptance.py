"""Acceptance criteria, one test per criterion, one PASS line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines; every equality below is exact (GF(2) ranks and orbit counts are
integers, residues are polynomials compared verbatim).
"""

import time

from morava2.cli import cli_main
from morava2.gf2poly import VarSpec
from morava2.groebner import buchberger, kernel_of_map, normal_form, rank
from morava2.groups import (
    binary_icosahedral,
    binary_octahedral,
    binary_tetrahedral,
    commuting_tuple_classes,
    conjugacy_classes,
    cyclic_group,
    quaternion_group,
    subgroup_index,
    _binary_tetrahedral_gens,
)
from morava2.invariants import (
    check_order,
    check_well_defined,
    elementary_symmetric_check,
    invariant_space,
    sigma_q8,
)
from morava2.presentations import build, fg_recursion
from morava2.verifier import RunConfig, render_json, render_text, run_suite


def _report(n, label, t0):
    print(f"PASS criterion {n}: {label} ({time.time() - t0:.2f}s)")


def _rank(family, s, **kw):
    r = rank(buchberger(build(family, s, **kw).ideal))
    assert isinstance(r, int)
    return r


def test_criterion_01_q8_rank_matches_oracle_s1():
    t0 = time.time()
    r = _rank("q8", 1)
    oracle = commuting_tuple_classes(quaternion_group(1), 1, 2)
    assert r == 5
    assert oracle == 5
    _report(1, "q8 rank s=1 equals oracle (5 = 5)", t0)


def test_criterion_02_q16_rank_matches_class_count():
    t0 = time.time()
    r = _rank("quaternion", 1, m=2)
    classes = len(conjugacy_classes(quaternion_group(2)))
    assert r == 7
    assert classes == 7
    _report(2, "quaternion m=2 rank s=1 equals class count (7 = 7)", t0)


def test_criterion_03_tetra_closed_form_and_oracle():
    t0 = time.time()
    expected = {1: 3, 2: 10, 3: 36}
    for s in (1, 2, 3):
        assert _rank("tetra", s) == (2 ** s + 1) * 2 ** (s - 1) == expected[s]
    for s in (1, 2):
        assert commuting_tuple_classes(binary_tetrahedral(), s, 2) == expected[s]
    _report(3, "tetra ranks (3, 10, 36) with oracle match at s=1,2", t0)


def test_criterion_04_cyclic_ranks():
    t0 = time.time()
    for k in (1, 2, 3):
        for s in (1, 2, 3):
            assert _rank("cyclic", s, k=k) == 2 ** (k * s)
        assert commuting_tuple_classes(cyclic_group(k), 1, 2) == 2 ** k
    _report(4, "cyclic ranks 2^(ks) for k,s <= 3; oracle match at s=1", t0)


def test_criterion_05_q8_rank_s2_vs_oracle():
    t0 = time.time()
    r = _rank("q8", 2)
    oracle = commuting_tuple_classes(quaternion_group(1), 2, 2)
    assert r == oracle == 22
    _report(5, "q8 rank s=2 equals commuting-pair oracle (22 = 22)", t0)


def test_criterion_06_sigma_and_invariants():
    t0 = time.time()
    for s in (1, 2, 3):
        sigma = sigma_q8(s)
        assert check_well_defined(sigma)
        assert check_order(sigma, 3)
    for s in (1, 2):
        spec = build("q8", s)
        inv = invariant_space(spec, sigma_q8(s))
        assert inv.total_rank == _rank("tetra", s)
        kern = kernel_of_map((VarSpec("t", 4),), (spec.context.var("c2"),), spec.ideal)
        for p in inv.elements():
            expr = kern.express(p)
            assert expr.context.names == ("t",)
    _report(6, "sigma well defined, order 3 (s<=3); invariants match tetra and live in c2 (s<=2)", t0)


def test_criterion_07_elementary_symmetric_residues():
    t0 = time.time()
    for s in (1, 2):
        e1, e2, e3 = elementary_symmetric_check(s)
        assert not e2
        assert not e3
        if s == 1:
            ctx = e1.context
            c2 = ctx.var("c2")
            assert e1 == c2 + c2 ** 2
    reports = run_suite(RunConfig(s_max=2, suites=("invariant",)))
    e1_claims = [r for r in reports if r.claim_id.startswith("invariant.elem_sym.e1")]
    assert {r.status for r in e1_claims} == {"RECORDED"}
    _report(7, "e2, e3 residues vanish (s<=2); e1 recorded, s=1 residue = c2 + c2^2", t0)


def test_criterion_08_octa_subring_triple():
    t0 = time.time()
    target = build("quaternion", 1, m=2)
    ctx = target.context
    kern = kernel_of_map((VarSpec("c", 2), VarSpec("c2", 4)), (ctx.var("c"), ctx.var("c2")), target.ideal)
    sub_rank = kern.quotient_rank()
    oracle = commuting_tuple_classes(binary_octahedral(), 1, 2)
    pres_rank = _rank("octa", 1)
    assert sub_rank == oracle == 6
    assert pres_rank == 4
    reports = run_suite(RunConfig(s_max=1, suites=("subring",)))
    octa = next(r for r in reports if r.claim_id == "subring.octa.s=1")
    assert octa.status == "RECORDED"
    assert octa.witness == {"subringRank": 6, "presentationRank": 4, "oracle": 6, "mismatch": True}
    _report(8, "octa subring rank 6 equals oracle; triple (6, 4, 6) recorded", t0)


def test_criterion_09_so3_suite():
    t0 = time.time()
    for s in (2, 3):
        pair = fg_recursion(s)
        assert pair.exact
        o2 = build("o2", s)
        gb = buchberger(o2.ideal)
        octx = o2.context
        c, c2 = octx.var("c"), octx.var("c2")
        images = {"v": c * c + c * c2 ** (2 ** (s - 1)) + c2, "w": c * c2}
        assert not normal_form(pair.f.substitute(images), gb)
        assert not normal_form(pair.g.substitute(images), gb)
        kern = kernel_of_map(
            (VarSpec("v", 4), VarSpec("w", 6)),
            (images["v"], images["w"]),
            o2.ideal,
            bound=40,
        )
        assert min(g.max_wdeg() for g in kern.kernel_gens) == pair.f.max_wdeg()
    p4 = fg_recursion(4)
    assert not p4.exact
    assert str(p4.witness) == "w^7"
    reports = run_suite(RunConfig(s_max=4, suites=("fg_recursion",)))
    s4 = next(r for r in reports if r.claim_id == "fg.recursion.s=4")
    assert s4.status == "RECORDED"
    assert "w^7" in s4.witness["notDivisibleWitness"]
    _report(9, "f_s, g_s vanish in the o2 quotient (s=2,3); s=4 recursion recorded inexact (w^7)", t0)


def test_criterion_10_homogeneity():
    t0 = time.time()
    reports = run_suite(RunConfig(s_max=3, suites=("homogeneity",)))
    assert reports, "homogeneity suite produced no claims"
    assert all(r.status == "VERIFIED" for r in reports)
    _report(10, f"all {len(reports)} presentations homogeneous mod 2(2^s - 1) for s<=3, m<=3, k<=3", t0)


def test_criterion_11_icosahedral():
    t0 = time.time()
    ti = binary_icosahedral()
    assert ti.order == 120
    assert subgroup_index(ti, _binary_tetrahedral_gens(5)) == 5
    a = commuting_tuple_classes(binary_tetrahedral(), 1, 2)
    b = commuting_tuple_classes(ti, 1, 2)
    assert a == b == 3
    _report(11, "binary icosahedral order 120, tetra index 5, oracle ranks agree (3 = 3)", t0)


def test_criterion_12_property_suite():
    t0 = time.time()
    import pytest

    outcome = pytest.main(["-q", "--no-header", "-p", "no:cacheprovider", "tests/test_properties.py"])
    assert outcome == 0
    _report(12, "randomized engine property suite (1000 checks per law)", t0)


def test_criterion_13_determinism(tmp_path):
    t0 = time.time()
    cfg = RunConfig()
    a = run_suite(cfg)
    b = run_suite(cfg)
    assert render_json(a) == render_json(b)
    assert render_text(a) == render_text(b)
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert cli_main(["--format", "json", "--out", str(out1)]) == 0
    assert cli_main(["--format", "json", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    _report(13, "two full default runs produce byte-identical reports", t0)
