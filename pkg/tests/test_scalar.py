"""Tests for the exact scalar layer: dual numbers, series, structure functions."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ckq.scalar import (
    ALL_J,
    DC_I,
    DC_ONE,
    DC_ZERO,
    DualCoeff,
    GR_I,
    GR_ONE,
    GaussRational,
    JAssign,
    JSeries,
    NIL1,
    NIL12,
    NIL2,
    ZSeries,
    dual_mul,
    gr,
    jseries_structure_fn,
    series_arith,
    series_sqrt_one_plus,
    series_subst_scale,
    structure_fn,
)

# -- strategies -------------------------------------------------------------

small_fracs = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)

gauss = st.builds(GaussRational, small_fracs, small_fracs)

duals = st.builds(DualCoeff, gauss, gauss, gauss, gauss)


def zseries(order=4):
    return st.lists(duals, min_size=0, max_size=order + 1).map(
        lambda cs: ZSeries(order, cs)
    )


# -- Gaussian rationals -----------------------------------------------------


@given(gauss, gauss, gauss)
def test_gauss_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(gauss)
def test_gauss_field_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == GR_ONE


def test_gauss_basics():
    assert GR_I * GR_I == GaussRational(-1)
    assert gr(Fraction(3, 4)) + gr(Fraction(1, 4)) == GR_ONE
    assert (GaussRational(1, 2) ** 2) == GaussRational(-3, 4)
    assert str(GaussRational(Fraction(1, 2), Fraction(-1, 3))) == "1/2-1/3i"


# -- dual numbers -----------------------------------------------------------


def test_dual_nilpotency():
    assert dual_mul(NIL1, NIL1).is_zero()
    assert dual_mul(NIL2, NIL2).is_zero()
    assert dual_mul(NIL1, NIL2) == NIL12
    assert not dual_mul(NIL1, NIL2).is_zero()
    assert dual_mul(NIL1, NIL2) == dual_mul(NIL2, NIL1)
    one_plus = DC_ONE + NIL1
    one_minus = DC_ONE - NIL1
    assert one_plus * one_minus == DC_ONE


@given(duals, duals, duals)
def test_dual_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(duals)
def test_dual_inverse(d):
    if d.is_invertible():
        assert d * d.inverse() == DC_ONE
    else:
        with pytest.raises(ZeroDivisionError):
            d.inverse()


@given(duals)
def test_dual_pure_nilpotent_depth(d):
    n = DualCoeff(0, d.c1, d.c2, d.c12)
    sq = n * n
    # squares of pure nilpotents live on the top component, cubes vanish
    assert sq.c0.is_zero() and sq.c1.is_zero() and sq.c2.is_zero()
    assert (sq * n).is_zero()


# -- j assignments ----------------------------------------------------------


def test_jassign_tokens_roundtrip():
    for j in ALL_J:
        assert JAssign.parse(j.token) == j
    with pytest.raises(ValueError):
        JAssign.parse("2,1")


def test_jassign_eval_mono():
    j = JAssign.parse("i1,1")
    assert j.eval_mono(1, 0) == NIL1
    assert j.eval_mono(2, 0) == DC_ZERO
    assert j.eval_mono(0, -3) == DC_ONE  # unit j2 absorbs any power
    assert j.eval_mono(1, 5) == NIL1
    with pytest.raises(ZeroDivisionError):
        j.eval_mono(-1, 0)
    both = JAssign.parse("i1,i2")
    assert both.eval_mono(1, 1) == NIL12


# -- truncated series -------------------------------------------------------


def test_series_examples():
    n = 3
    one_plus_z = ZSeries(n, [DC_ONE, DC_ONE])
    one_minus_z = ZSeries(n, [DC_ONE, -DC_ONE])
    prod = one_plus_z * one_minus_z
    assert prod == ZSeries(n, [DC_ONE, DC_ZERO, -DC_ONE])
    # truncation kills z^n * z
    zn = ZSeries.monomial(n, 1, n)
    assert (zn * ZSeries.var(n)).is_zero()
    # nilpotent coefficients square to zero
    nz = ZSeries.monomial(1, NIL1, n)
    assert (nz * nz).is_zero()


def test_series_order_mismatch():
    with pytest.raises(ValueError):
        series_arith(ZSeries.one(3), ZSeries.one(4), "add")


@settings(max_examples=60)
@given(zseries(), zseries(), zseries())
def test_series_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (b - a) == b


@given(zseries())
def test_series_inverse(a):
    if a.constant().is_invertible():
        assert a * a.inverse() == ZSeries.one(a.order)


def test_series_shift_down():
    s = ZSeries(4, [DC_ZERO, DC_ZERO, DC_ONE, DC_I])
    t = s.shift_down(2)
    assert t.coeffs[0] == DC_ONE and t.coeffs[1] == DC_I
    with pytest.raises(ValueError):
        s.shift_down(3)


# -- structure functions ----------------------------------------------------


def test_structure_fn_unit_values():
    e = structure_fn("exp", 1, DC_ONE, 3)
    assert [c for c in e.coeffs] == [
        DC_ONE,
        DC_ONE,
        DualCoeff(Fraction(1, 2)),
        DualCoeff(Fraction(1, 6)),
    ]
    c = structure_fn("cosh", 1, NIL1, 8)
    assert c == ZSeries.one(8)
    s = structure_fn("sinhc", 1, NIL12, 8)
    assert s == ZSeries.var(8)  # higher terms carry J^2 = 0
    sh = structure_fn("sinh", 1, NIL1, 8)
    assert sh == ZSeries.monomial(1, NIL1, 8)


@pytest.mark.parametrize("jtok", ["1,1", "i1,1", "1,i2", "i1,i2"])
@pytest.mark.parametrize("scale", [1, Fraction(1, 2), GaussRational(0, 1)])
def test_structure_fn_identities(jtok, scale):
    j = JAssign.parse(jtok)
    jf = j.eval_mono(1, 1)
    n = 8
    ch = structure_fn("cosh", scale, jf, n)
    sh = structure_fn("sinh", scale, jf, n)
    ex = structure_fn("exp", scale, jf, n)
    shc = structure_fn("sinhc", scale, jf, n)
    assert ch * ch - sh * sh == ZSeries.one(n)
    assert ex == ch + sh
    assert shc.scalar_mul(jf) == sh


def test_structure_fn_exact_for_dual_j():
    # with any nilpotent multiplier the series is a polynomial: the output
    # at higher truncation restricts to the lower one and the tail is zero
    for jtok in ("i1,1", "1,i2", "i1,i2"):
        jf = JAssign.parse(jtok).eval_mono(1, 1)
        for kind in ("exp", "cosh", "sinh", "sinhc"):
            lo = structure_fn(kind, 1, jf, 4)
            hi = structure_fn(kind, 1, jf, 8)
            assert hi.restrict(4) == lo
            assert all(c.is_zero() for c in hi.coeffs[4:])


def test_sqrt_one_plus():
    n = 6
    z = ZSeries.var(n)
    assert series_sqrt_one_plus(ZSeries.zero(n)) == ZSeries.one(n)
    # perfect square
    s = ZSeries(n, [DC_ZERO, DualCoeff(2), DC_ONE])
    assert series_sqrt_one_plus(s) == ZSeries(n, [DC_ONE, DC_ONE])
    # generic: coefficients are the binomial numbers for (1+z)^(1/2),
    # recomputed here by the product formula
    r = series_sqrt_one_plus(z)
    binom = Fraction(1)
    expect = [Fraction(1)]
    for k in range(1, n + 1):
        binom = binom * (Fraction(1, 2) - (k - 1)) / k
        expect.append(binom)
    assert [c.c0.re for c in r.coeffs] == expect
    assert expect[:5] == [
        Fraction(1),
        Fraction(1, 2),
        Fraction(-1, 8),
        Fraction(1, 16),
        Fraction(-5, 128),
    ]
    with pytest.raises(ValueError):
        series_sqrt_one_plus(ZSeries.one(n))


@settings(max_examples=40)
@given(zseries())
def test_sqrt_squares_back(a):
    s = ZSeries(a.order, (DC_ZERO,) + a.coeffs[1:])
    r = series_sqrt_one_plus(s)
    assert r * r == ZSeries.one(a.order) + s


def test_subst_scale():
    n = 5
    e = structure_fn("exp", 1, DC_ONE, n)
    assert series_subst_scale(e, NIL1) == ZSeries(n, [DC_ONE, NIL1])
    zsq = ZSeries.monomial(2, 1, n)
    assert series_subst_scale(zsq, GaussRational(0, Fraction(1, 2))) == ZSeries.monomial(
        2, Fraction(-1, 4), n
    )
    # sinh(z) under z -> i z/2 becomes i sin(z/2): iz/2 - i z^3/48 + ...
    sh = structure_fn("sinh", 1, DC_ONE, n)
    got = series_subst_scale(sh, GaussRational(0, Fraction(1, 2)))
    expect = ZSeries.zero(n)
    for m in range(0, n + 1, 2):
        k = m + 1
        if k > n:
            break
        coeff = (GaussRational(0, Fraction(1, 2)) ** k) * GaussRational(
            Fraction(1, factorial(k))
        )
        expect = expect + ZSeries.monomial(k, coeff, n)
    assert got == expect
    assert got.coeffs[1] == DualCoeff(GaussRational(0, Fraction(1, 2)))
    assert got.coeffs[3] == DualCoeff(GaussRational(0, Fraction(-1, 48)))


# -- symbolic-j series ------------------------------------------------------


def test_jseries_specialize_matches_direct():
    n = 6
    for jtok in ("1,1", "i1,1", "1,i2", "i1,i2"):
        j = JAssign.parse(jtok)
        for kind in ("exp", "cosh", "sinh", "sinhc"):
            sym = jseries_structure_fn(kind, 1, 1, 1, n)
            direct = structure_fn(kind, 1, j.eval_mono(1, 1), n)
            assert sym.specialize(j) == direct


def test_jseries_laurent_cancellation():
    n = 4
    # sinh(j1 j2 z) / (j1 j2) stays polynomial after the cancellation
    sh = jseries_structure_fn("sinh", 1, 1, 1, n)
    ratio = sh.mul_mono(-1, -1)
    assert ratio == jseries_structure_fn("sinhc", 1, 1, 1, n)
    # and specializes even at fully dual assignments
    assert ratio.specialize(JAssign.parse("i1,i2")) == ZSeries.var(n)
    # an uncancelled negative power refuses to specialize at dual values
    bad = JSeries.term(0, 1, -1, 0, n)
    with pytest.raises(ZeroDivisionError):
        bad.specialize(JAssign.parse("i1,1"))
    assert bad.specialize(JAssign.parse("1,i2")) == ZSeries.one(n)


def test_jseries_inverse_and_clear():
    n = 5
    q = jseries_structure_fn("exp", 1, 1, 1, n)
    qinv = q.inverse()
    assert (q * qinv) == JSeries.one(n)
    assert qinv == jseries_structure_fn("exp", -1, 1, 1, n)
    # clearing the common monomial factor
    s = JSeries.term(0, 1, 2, 1, n) + JSeries.term(1, 3, 2, 3, n)
    cleared, (e1, e2) = s.clear_min()
    assert (e1, e2) == (2, 1)
    assert cleared == JSeries.term(0, 1, 0, 0, n) + JSeries.term(1, 3, 0, 2, n)
    with pytest.raises(ZeroDivisionError):
        (JSeries.one(n) + JSeries.term(0, 1, 1, 0, n)).inverse()


def test_jseries_subst_scale_mono():
    n = 4
    # substituting z -> j1 j2 z into exp(z) gives exp(j1 j2 z)
    e = jseries_structure_fn("exp", 1, 0, 0, n)
    assert e.subst_scale_mono(1, 1, 1) == jseries_structure_fn("exp", 1, 1, 1, n)


def test_jseries_ring_ops_random():
    import random

    rng = random.Random(20240815)
    n = 3

    def rand_js():
        out = JSeries.zero(n)
        for _ in range(rng.randint(0, 5)):
            out = out + JSeries.term(
                rng.randint(0, n),
                Fraction(rng.randint(-3, 3)),
                rng.randint(-2, 2),
                rng.randint(-2, 2),
                n,
            )
        return out

    for _ in range(40):
        a, b, c = rand_js(), rand_js(), rand_js()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        # specialization is a ring map wherever it is defined
        try:
            lhs = (a * b).specialize(ALL_J[1])
            rhs = a.specialize(ALL_J[1]) * b.specialize(ALL_J[1])
        except ZeroDivisionError:
            continue
        assert lhs == rhs
