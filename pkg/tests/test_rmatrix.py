import numpy as np
import pytest

from qboson import DeformParams, ParameterError, Window, build_rep, q_power
from qboson.fockrep import window_block, window_indices
from qboson.hopfops import HopfFamily
from qboson.rmatrix import (RSpec, antipode_leg, build_r, check_antipode_inverse,
                            check_counit, check_fusion, check_intertwiner,
                            check_yan_relation, check_yang_baxter, family_for)

QD = RSpec(kind="quantum_double")
YAN = RSpec(kind="yan_claimed")


def test_rspec_validation():
    with pytest.raises(ParameterError):
        RSpec(kind="mystery")
    with pytest.raises(ParameterError):
        RSpec(kind="general_family", m=0.5)  # missing K, sign
    with pytest.raises(ParameterError):
        RSpec(kind="quantum_double", m=0.5, K=0, sign="lower")
    spec = RSpec(kind="general_family", m=1.0, K=0, sign="upper")
    assert "general_family" in spec.label()


def test_family_for(params):
    assert family_for(QD, params).is_canonical()
    fam = family_for(RSpec(kind="general_family", m=1.0, K=0, sign="upper"), params)
    assert fam.m == 1.0 and not fam.is_canonical()


def test_build_r_diagonal_prefactor(params):
    # the k = 0 term puts q**((n1 + c - ia/g)(n2 + c - ia/g)) on the diagonal
    rep = build_rep(6, 0.5, params)
    R = build_r(QD, rep, rep)
    iag = params.ialpha_over_gamma
    n = rep.n_diag()
    want = q_power(np.multiply.outer(n - iag, n - iag).reshape(-1), params)
    assert np.allclose(np.diag(R), want)


def test_build_r_requires_shared_params():
    rep1 = build_rep(4, 0.5, DeformParams(q=1.3))
    rep2 = build_rep(4, 0.5, DeformParams(q=1.4))
    with pytest.raises(ParameterError):
        build_r(QD, rep1, rep2)


def test_series_termination_exact(params):
    # the k-sum is exactly finite: doubling the second factor changes
    # nothing on the common window
    rep1 = build_rep(8, 0.5, params)
    rep2a = build_rep(8, 0.5, params)
    rep2b = build_rep(16, 0.5, params)
    win = Window(5, guard=2)
    Ra = window_block(build_r(QD, rep1, rep2a), (8, 8), win)
    idx1 = window_indices((8,), win.max_index)
    idx2 = window_indices((16,), win.max_index)
    Rb_full = build_r(QD, rep1, rep2b)
    flat = [i1 * 16 + i2 for i1 in idx1 for i2 in idx2]
    Rb = Rb_full[np.ix_(flat, flat)]
    assert np.abs(Ra - Rb).max() <= 1e-14 * max(1.0, np.abs(Ra).max())


def test_specialization_matches_quantum_double():
    # the canonical grid point of the general family IS the double's R
    for kappa in (0, 1):
        p = DeformParams(q=1.3, kappa=kappa)
        rep = build_rep(10, 0.5, p)
        spec = RSpec(kind="general_family", m=0.5, K=-2 * kappa - 1, sign="lower")
        Rg = build_r(spec, rep, rep)
        Rq = build_r(QD, rep, rep)
        assert np.abs(Rg - Rq).max() <= 1e-12 * max(1.0, np.abs(Rq).max())


@pytest.mark.parametrize("gen", ["N", "a", "adag"])
def test_quantum_double_intertwiner(params, gen):
    rep = build_rep(12, 0.5, params)
    fam = HopfFamily.canonical(params)
    rpt = check_intertwiner(QD, fam, rep, rep, gen, Window(4, guard=1))
    assert rpt.normalized_residual <= 1e-9
    assert rpt.verdict == "pass"


def test_intertwiner_monotone_in_dimension(params_real):
    # fixed window, every admissible D: exactness is not a lucky truncation
    fam = HopfFamily.canonical(params_real)
    for D in (6, 8, 10, 12):
        rep = build_rep(D, 0.5, params_real)
        rpt = check_intertwiner(QD, fam, rep, rep, "a", Window(4, guard=1))
        assert rpt.normalized_residual <= 1e-9, D


def test_yan_intertwiner_fails_robustly():
    # the failure must survive truncation growth and both q branches
    for q in (1.3, 0.7 + 0.2j):
        p = DeformParams(q=q)
        fam = HopfFamily.canonical(p)
        for D in (8, 12):
            rep = build_rep(D, 0.5, p)
            rpt = check_intertwiner(YAN, fam, rep, rep, "a", Window(4, guard=1))
            assert rpt.normalized_residual > 100 * p.tol, (q, D)
            assert rpt.verdict == "fail"


def test_yan_intertwiner_n_holds_trivially(params):
    # both candidates commute with N (x) I + I (x) N, so the N-intertwiner
    # cannot distinguish them; the lowering generator does
    rep = build_rep(10, 0.5, params)
    fam = HopfFamily.canonical(params)
    rpt = check_intertwiner(YAN, fam, rep, rep, "N", Window(4, guard=1))
    assert rpt.normalized_residual <= 1e-12


def test_yang_baxter(params):
    rep = build_rep(8, 0.5, params)
    rpt = check_yang_baxter(QD, rep, rep, rep)
    assert rpt.normalized_residual <= 1e-8
    assert rpt.window == 3  # auto window obeys 2W <= D - 1
    bad = check_yang_baxter(YAN, rep, rep, rep)
    assert bad.normalized_residual > 100 * params.tol
    assert bad.verdict == "fail"


def test_yang_baxter_near_classical():
    p = DeformParams(q=1.0 + 1e-6)
    rep = build_rep(8, 0.5, p)
    rpt = check_yang_baxter(QD, rep, rep, rep)
    assert rpt.normalized_residual <= 1e-8


def test_yang_baxter_dim_cap(params_real):
    rep = build_rep(8, 0.5, params_real)
    with pytest.raises(ParameterError):
        check_yang_baxter(QD, rep, rep, rep, dim_cap=100)


def test_fusion(params):
    rep = build_rep(8, 0.5, params)
    fam = HopfFamily.canonical(params)
    for rpt in check_fusion(QD, fam, rep, rep, rep):
        assert rpt.normalized_residual <= 1e-8, rpt.identity
    bad = check_fusion(YAN, fam, rep, rep, rep)
    assert max(r.normalized_residual for r in bad) > 100 * params.tol


def test_general_family_grid_point(params):
    # a non-canonical family member passes its whole identity suite
    spec = RSpec(kind="general_family", m=1.0, K=0, sign="upper")
    fam = family_for(spec, params)
    rep = build_rep(10, 0.5, params)
    rep8 = build_rep(8, 0.5, params)
    for gen in ("N", "a", "adag"):
        assert check_intertwiner(spec, fam, rep, rep, gen,
                                 Window(4, guard=1)).normalized_residual <= 1e-9
    assert check_yang_baxter(spec, rep8, rep8, rep8).normalized_residual <= 1e-8
    for rpt in check_fusion(spec, fam, rep8, rep8, rep8):
        assert rpt.normalized_residual <= 1e-8
    for rpt in check_counit(spec, fam, rep, rep):
        assert rpt.normalized_residual <= 1e-12


def test_antipode_inverse(params):
    rep = build_rep(12, 0.5, params)
    fam = HopfFamily.canonical(params)
    rpt = check_antipode_inverse(QD, fam, rep, rep, Window(4, guard=1))
    assert rpt.normalized_residual <= 1e-9
    # explicit two-sided check of the leg construction
    R = build_r(QD, rep, rep)
    Rinv = antipode_leg(QD, fam, rep, rep)
    eye = np.eye(144)
    win = Window(4, guard=1)
    assert np.abs(window_block(R @ Rinv - eye, (12, 12), win)).max() <= 1e-9
    assert np.abs(window_block(Rinv @ R - eye, (12, 12), win)).max() <= 1e-9


def test_antipode_inverse_yan_is_informational(params_real):
    rep = build_rep(8, 0.5, params_real)
    fam = HopfFamily.canonical(params_real)
    rpt = check_antipode_inverse(YAN, fam, rep, rep, Window(3, guard=1),
                                 verdict_override="info")
    assert rpt.verdict == "info"


def test_counit_normalization(params):
    rep = build_rep(10, 0.5, params)
    fam = HopfFamily.canonical(params)
    for rpt in check_counit(QD, fam, rep, rep):
        assert rpt.normalized_residual <= 1e-12
    # the published candidate does not pass counit normalization
    worst = max(r.normalized_residual for r in check_counit(YAN, fam, rep, rep))
    assert worst > 1e-3


def test_yan_relation(params):
    rep = build_rep(12, 0.5, params)
    fam = HopfFamily.canonical(params)
    # the candidate named after the relation does not satisfy it
    rpt = check_yan_relation(YAN, fam, rep, rep, "N", Window(4, guard=1))
    assert rpt.normalized_residual > 100 * params.tol
    # the double's R does not satisfy it either (reported, informational)
    rpt2 = check_yan_relation(QD, fam, rep, rep, "N", Window(4, guard=1),
                              verdict_override="info")
    assert rpt2.normalized_residual > 100 * params.tol
    assert rpt2.verdict == "info"


def test_yan_relation_constant_diagnostic(params_real):
    # stripping the scalar structure constant from both coproducts kills
    # the N-relation residual entirely: both series commute with the
    # total number operator, so the constant carries the whole failure
    rep = build_rep(10, 0.5, params_real)
    fam = HopfFamily.canonical(params_real)
    for spec in (QD, YAN):
        with_const = check_yan_relation(spec, fam, rep, rep, "N", Window(4, guard=1))
        stripped = check_yan_relation(spec, fam, rep, rep, "N", Window(4, guard=1),
                                      strip_constant=True)
        assert with_const.normalized_residual > 1e-2
        assert stripped.normalized_residual <= 1e-12
    with pytest.raises(ParameterError):
        check_yan_relation(QD, fam, rep, rep, "a", strip_constant=True)


def test_yan_relation_failure_stable_across_truncations():
    for q in (1.3, 0.7 + 0.2j):
        p = DeformParams(q=q)
        fam = HopfFamily.canonical(p)
        values = []
        for D in (8, 12):
            rep = build_rep(D, 0.5, p)
            rpt = check_yan_relation(YAN, fam, rep, rep, "N", Window(4, guard=1))
            values.append(rpt.normalized_residual)
        assert min(values) > 100 * p.tol
        assert values[0] == pytest.approx(values[1], rel=0.5)  # no truncation artifact


def test_r_build_windowed_agreement_across_dims(params):
    # D vs 2D: windowed entries of R agree (leak-free construction)
    win = Window(3, guard=2)
    repA = build_rep(6, 0.5, params)
    repB = build_rep(12, 0.5, params)
    RA = window_block(build_r(QD, repA, repA), (6, 6), win)
    RB = window_block(build_r(QD, repB, repB), (12, 12), win)
    assert np.abs(RA - RB).max() <= 1e-14 * max(1.0, np.abs(RA).max())
