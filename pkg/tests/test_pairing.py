"""Pairing seeds, functional matrices, and annihilation checks."""

import pytest

from ckq import funq, pairing
from ckq.freealg import NCPoly, apply_map
from ckq.funq import hopf_maps_fun
from ckq.matrix import mat_sub
from ckq.scalar import ALL_J, GR_I, DualCoeff, JAssign, structure_fn

N = 8
J11 = JAssign.parse("1,1")

CASES = [(v, j) for v in sorted(funq.VARIANTS) for j in ALL_J]
CASE_IDS = [f"{v}-{j.token}" for v, j in CASES]

_I = DualCoeff.scalar(GR_I)


def test_seed_spot_values_at_unit_scales():
    from fractions import Fraction

    p = pairing.DualPairing("v02", J11, N)
    half = structure_fn("cosh", Fraction(1, 2), p.fun.jf, N)
    assert p.table[("t", "a1")] == half
    sh = structure_fn("sinh", 1, p.fun.jf, N)
    sh_half = structure_fn("sinh", Fraction(1, 2), p.fun.jf, N)
    assert p.table[("u1", "b1")] == -(sh * sh_half)
    assert p.table[("u2", "b2")] == -(sh * sh_half)
    assert ("t", "b1") not in p.table
    assert ("u1", "a1") not in p.table


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
def test_lt_functional_matrices(name, j):
    rep = pairing.verify_LT_pairing(name, j, N)
    assert rep.ok, [i.name for i in rep.items if not i.ok]
    assert rep.status == "pass"
    assert len(rep.items) == 7


def test_flipped_cross_seed_breaks_matrix_match():
    spec = funq.VARIANTS["v02"]
    table = pairing.generic_pair_table(spec, N)
    table[("u2", "b1")] = table[("u2", "b1")].scalar_mul(-1)
    lp, _ = pairing._generic_l_matrices(spec, N)
    m_plus = pairing._generic_functional_matrix(lp, spec, N, table)
    diff = mat_sub(m_plus, pairing._leg_flip(pairing._generic_braiding(spec, N)))
    assert any(not e.is_zero() for row in diff for e in row)


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
def test_relation_functionals_annihilate_words(name, j):
    rep = pairing.verify_relation_functionals(name, j, N, 3)
    assert rep.ok, [i.name for i in rep.items if not i.ok]
    assert rep.info["fun_words"] == 85


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
def test_dual_words_annihilate_ideal(name, j):
    rep = pairing.verify_ideal_annihilation(name, j, N, 3)
    assert rep.ok, [i.name for i in rep.items if not i.ok]
    assert rep.info["dual_words"] == 85


def test_bracket_without_exponential_factor_detected():
    # the dual-side bracket normalization is invisible to the internal
    # Hopf checks; the pairing is what pins it down
    p = pairing.DualPairing("v02", J11, N)
    su = p.su
    one = p._one
    w = NCPoly.word
    c_wrong = su.sinh.scalar_mul(su.sig12 * _I)
    rel = (
        w(("u2", "u1"), one) - w(("u1", "u2"), one)
        - w(("t", "t"), c_wrong) + w(("tinv", "tinv"), c_wrong)
    )
    assert not p.pair(rel, NCPoly.gen("a2", one)).is_zero()


def test_grouplike_square_pairs_with_doubled_angle():
    for name, tok in (("v02", "1,1"), ("v12", "1,i2")):
        p = pairing.DualPairing(name, JAssign.parse(tok), N)
        got = p.pair_words(("t", "t"), ("a1",))
        assert got == structure_fn("cosh", 1, p.fun.jf, N)


def test_reversed_grouplike_seed_is_antipode_composition():
    p = pairing.DualPairing("v12", JAssign.parse("i1,1"), N)
    _, _, anti = hopf_maps_fun(p.fun)
    for g in ("a1", "a2", "b1", "b2"):
        lhs = p.pair(NCPoly.word(("tinv",), p._one), NCPoly.gen(g, p._one))
        rhs = p.pair(
            NCPoly.word(("t",), p._one), apply_map(anti, NCPoly.gen(g, p._one))
        )
        assert lhs == rhs


def test_counit_base_cases():
    p = pairing.DualPairing("v02", J11, 4)
    assert p.pair_words((), ("a1", "a1")) == p._one
    assert p.pair_words((), ("a1", "b1")).is_zero()
    assert p.pair_words(("t",), ()) == p._one
    assert p.pair_words(("u1",), ()).is_zero()
