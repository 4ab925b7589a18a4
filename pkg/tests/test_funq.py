"""Exchange relations, braiding consistency and Hopf structure checks."""

import pytest

from ckq import funq
from ckq.freealg import NCPoly, RewriteSystem, critical_pairs_check, nc_commutator
from ckq.matrix import mat_det
from ckq.scalar import ALL_J, GR_I, JAssign, ZSeries, structure_fn

N = 6
J11 = JAssign.parse("1,1")
JDUAL = JAssign.parse("i1,i2")

CASES = [(v, j) for v in sorted(funq.VARIANTS) for j in ALL_J]
CASE_IDS = [f"{v}-{j.token}" for v, j in CASES]


def test_variant_ratio_monomials():
    expected = {
        "v02": {"mix": (0, 0), "b1": (0, 2), "b2": (2, 0)},
        "v12": {"mix": (2, 0), "b1": (0, 2), "b2": (0, 0)},
        "v01": {"mix": (0, 2), "b1": (0, 0), "b2": (2, 0)},
    }
    for name, spec in funq.VARIANTS.items():
        assert spec.ratio_mix == expected[name]["mix"]
        assert spec.ratio_b1 == expected[name]["b1"]
        assert spec.ratio_b2 == expected[name]["b2"]
        for mono in (spec.ratio_mix, spec.ratio_b1, spec.ratio_b2):
            assert mono[0] >= 0 and mono[1] >= 0


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
def test_rules_validate_in_both_modes(name, j):
    bi = funq.build_fun(name, j, N, "bialgebra")
    ring = funq.build_fun(name, j, N, "ring")
    assert ("a1", "a1") not in bi.rs.rules
    assert ("a1", "a1") in ring.rs.rules
    assert ("a1", "a1") in ring.rs.measure_exempt


def test_exchange_coefficients_at_unit_scales():
    alg = funq.build_fun("v02", J11, N)
    one = alg.one()
    ch = structure_fn("cosh", 1, alg.jf, N)
    sh = structure_fn("sinh", 1, alg.jf, N)
    em = structure_fn("exp", -1, alg.jf, N)

    r = alg.rs.rules[("a1", "b1")]
    assert r.coeff(("b1", "a1")) == ch
    assert r.coeff(("b1", "a2")) == sh.scalar_mul(GR_I)

    r = alg.rs.rules[("a2", "b1")]
    assert r.coeff(("b1", "a2")) == ch
    assert r.coeff(("b1", "a1")) == -sh.scalar_mul(GR_I)

    r = alg.rs.rules[("a2", "a1")]
    assert r.coeff(("a1", "a2")) == one
    assert r.coeff(("b1", "b1")) == (em * sh).scalar_mul(GR_I)
    assert r.coeff(("b2", "b2")) == (em * sh).scalar_mul(GR_I)


def test_fully_contracted_rules():
    alg = funq.build_fun("v02", JDUAL, N, "ring")
    one = alg.one()
    iz = ZSeries.monomial(1, GR_I, N)

    assert alg.rs.rules[("a1", "b1")] == NCPoly.word(("b1", "a1"), one)
    assert alg.rs.rules[("a1", "b2")] == NCPoly.word(("b2", "a1"), one)
    assert alg.rs.rules[("a2", "b1")] == (
        NCPoly.word(("b1", "a2"), one) - NCPoly.word(("b1", "a1"), iz)
    )
    assert alg.rs.rules[("a2", "a1")] == NCPoly.word(("a1", "a2"), one)
    assert alg.rs.rules[("a1", "a1")] == NCPoly.const(one)


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
def test_rtt_residual_vanishes(name, j):
    alg = funq.build_fun(name, j, N)
    assert all(p.is_zero() for row in funq.rtt_residual(alg) for p in row)


def test_rtt_detects_wrong_relation():
    alg = funq.FunAlgebra(funq.VARIANTS["v02"], J11, N, "bialgebra")
    bad = dict(alg.rs.rules)
    bad[("a2", "a1")] = NCPoly.word(("a1", "a2"), alg.one())  # b-part dropped
    alg.rs = RewriteSystem(funq.ALPHABET, bad)
    assert any(not p.is_zero() for row in funq.rtt_residual(alg) for p in row)


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
def test_ybe_residual_vanishes(name, j):
    res = funq.ybe_residual(name, j, N)
    assert all(e.is_zero() for row in res for e in row)


def test_ybe_detects_wrong_braiding():
    from ckq.matrix import kron_slot_pair, mat_mul, mat_sub

    rz = funq.r_matrix_z("v02", J11, N)
    rz[2][1] = rz[2][1] + ZSeries.monomial(2, 1, N)
    zero = lambda: ZSeries.zero(N)
    r12 = kron_slot_pair(rz, (0, 1), zero)
    r13 = kron_slot_pair(rz, (0, 2), zero)
    r23 = kron_slot_pair(rz, (1, 2), zero)
    lhs = mat_mul(mat_mul(r12, r13, zero), r23, zero)
    rhs = mat_mul(mat_mul(r23, r13, zero), r12, zero)
    assert any(not e.is_zero() for row in mat_sub(lhs, rhs) for e in row)


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
def test_braiding_determinant_is_one(name, j):
    r = funq.r_matrix(name, j, N)
    det = mat_det(r, lambda: ZSeries.zero(N))
    assert det == ZSeries.one(N)


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
def test_relations_recovered_from_exchange(name, j):
    derived = funq.relations_from_rtt(name, j, N)
    built = funq.build_fun(name, j, N).rs
    assert set(derived.rules) == set(built.rules)
    for lhs, rhs in built.rules.items():
        assert derived.rules[lhs] == rhs, lhs


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
@pytest.mark.parametrize("mode", ["bialgebra", "ring"])
def test_det_report(name, j, mode):
    rep = funq.det_report(name, j, N, mode)
    assert rep.ok, [it.name for it in rep.items if not it.ok]


def test_naive_det_shape_not_central():
    # dropping the series factor on the off-diagonal part breaks centrality
    alg = funq.build_fun("v02", J11, N)
    one = alg.one()
    w = NCPoly.word
    naive = (
        w(("a1", "a1"), one)
        + w(("a2", "a2"), one.scalar_mul(alg.jf2))
        + w(("b1", "b1"), one.scalar_mul(alg.sb1sq))
        + w(("b2", "b2"), one.scalar_mul(alg.sb2sq))
    )
    assert not nc_commutator(naive, alg.gen("a1"), alg.rs).is_zero()
    assert not nc_commutator(naive, alg.gen("a2"), alg.rs).is_zero()


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
def test_hopf_axioms_ring_mode(name, j):
    rep = funq.hopf_axiom_report_fun(name, j, N, "ring")
    assert rep.ok, [it.name for it in rep.items if not it.ok]


def test_hopf_axioms_bialgebra_mode_notes_det():
    rep = funq.hopf_axiom_report_fun("v02", J11, N, "bialgebra")
    assert rep.ok
    noted = [it for it in rep.items if "determinant" in it.note]
    assert noted


def test_antipode_products_recover_det_in_bialgebra_mode():
    alg = funq.build_fun("v12", J11, N, "bialgebra")
    delta, eps, antipode = funq.hopf_maps_fun(alg)
    from ckq.freealg import tensor_contract_multiply

    da1 = delta.images["a1"]
    left = alg.nf(tensor_contract_multiply(da1, (antipode, None), alg.one()))
    det = alg.nf(funq.quantum_det(alg))
    assert left == det
    assert not det == NCPoly.const(alg.one())


def test_antipode_square_spot_value():
    # half-dual case: cosh collapses but one mixing ratio survives
    alg = funq.build_fun("v02", JAssign.parse("i1,1"), N)
    _, _, antipode = funq.hopf_maps_fun(alg)
    from ckq.freealg import apply_map

    sq = apply_map(antipode, antipode.images["b1"])
    two_iz = ZSeries.monomial(1, 2, N).scalar_mul(GR_I)
    expected = NCPoly.gen("b1", alg.one()) - NCPoly.word(("b2",), two_iz)
    assert sq == expected


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
def test_contraction_report(name, j):
    rep = funq.verify_contraction_fun(name, j, N)
    assert rep.ok, [it.name for it in rep.items if not it.ok]


def test_quotient_commutators_most_contracted():
    alg = funq.build_fun("v02", JDUAL, N)
    comms = funq.central_quotient_commutators(alg)
    iz = ZSeries.monomial(1, GR_I, N)
    assert comms["b1,b2"].is_zero()
    assert comms["b1,a2"] == NCPoly.word(("b1",), iz)
    assert comms["b2,a2"] == NCPoly.word(("b2",), iz)


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
@pytest.mark.parametrize("mode", ["bialgebra", "ring"])
def test_confluence(name, j, mode):
    rep = funq.confluence_report_fun(name, j, 4, mode, maxlen=3)
    assert rep.ok, rep.items[0].note
    assert rep.info["words_checked"] > 0


def test_confluence_detects_inconsistent_coefficient():
    alg = funq.build_fun("v02", J11, 4)
    bad = dict(alg.rs.rules)
    zsq = ZSeries.monomial(2, 1, 4)
    r = bad[("a1", "b1")]
    bad[("a1", "b1")] = NCPoly(
        {w: (c + zsq if w == ("b1", "a1") else c) for w, c in r.terms.items()}
    )
    rep = critical_pairs_check(RewriteSystem(funq.ALPHABET, bad), 3)
    assert rep.failures
