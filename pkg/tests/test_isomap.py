"""Presentation map between the two dual-algebra families."""

from fractions import Fraction

import pytest

from ckq import isomap
from ckq.freealg import GenMap, NCPoly, apply_map
from ckq.scalar import (
    ALL_J,
    DualCoeff,
    GaussRational,
    JAssign,
    ZSeries,
    structure_fn,
)

N = 6
J11 = JAssign.parse("1,1")

CASES = [(v, j) for v in sorted(isomap._ISO_IMAGES) for j in ALL_J]
CASE_IDS = [f"{v}-{j.token}" for v, j in CASES]


def test_coverage_flags():
    assert isomap.iso_covered("v02")
    assert isomap.iso_covered("v12")
    assert not isomap.iso_covered("v01")


def test_uncovered_variant_raises():
    with pytest.raises(ValueError, match="v01"):
        isomap.IsoMap("v01", J11, N)


@pytest.mark.parametrize("name,j", CASES, ids=CASE_IDS)
def test_verify_iso(name, j):
    rep = isomap.verify_iso(name, j, N)
    assert rep.ok, [i.name for i in rep.items if not i.ok]
    assert rep.status == "pass-with-note"
    assert len(rep.items) == 15


def test_normalization_square_closed_form():
    iso = isomap.IsoMap("v02", J11, N)
    expect = (
        ZSeries.monomial(1, 2, N)
        * structure_fn("exp", GaussRational(0, Fraction(-1, 2)), iso.so.jf, N)
        * iso.so.sinc_half
    )
    assert (iso.norm * iso.norm - expect).is_zero()


def test_cartan_image_is_primitive_multiple():
    iso = isomap.IsoMap("v12", J11, N)
    img = iso.map.images["H"]
    assert set(img.terms) == {(iso.so.primitive,)}
    two_i = iso.so.one().scalar_mul(DualCoeff.scalar(GaussRational(0, 2)))
    assert img.terms[(iso.so.primitive,)] == two_i


def test_grouplike_image_matches_primitive_exponential():
    iso = isomap.IsoMap("v02", J11, N)
    lhs = iso.push(iso.su.cartan_exp(Fraction(1, 2)))
    assert (lhs - iso.so.primitive_exp(Fraction(-1, 2))).is_zero()


def _relation_residual_counts(iso, gmap):
    su, so = iso.su, iso.so
    out = {}
    for lhs, rhs in sorted(su.rs.rules.items()):
        d = NCPoly.word(lhs, su.one()) - rhs
        res = so.nf(apply_map(gmap, isomap._subst(d)))
        out[lhs] = sum(1 for c in res.terms.values() if not c.is_zero())
    return out


def test_wrong_image_sign_breaks_every_relation():
    iso = isomap.IsoMap("v02", J11, N)
    images = dict(iso.map.images)
    images["u1"] = NCPoly({w: -c for w, c in images["u1"].terms.items()})
    bad = GenMap(images, NCPoly.const(iso.so.one()))
    counts = _relation_residual_counts(iso, bad)
    assert all(n > 0 for n in counts.values()), counts


def test_missing_root_factor_breaks_only_the_bracket():
    # the Cartan relations are linear in the normalization series, so
    # dropping the square-root tail is visible only in the u2.u1 rule
    iso = isomap.IsoMap("v02", J11, N)
    so = iso.so
    quarter = structure_fn("exp", isomap._QUARTER_I, so.jf, N)
    noroot = ZSeries.monomial(1, 1, N) * quarter
    two_i = so.one().scalar_mul(DualCoeff.scalar(GaussRational(0, 2)))
    images = {"H": NCPoly.word((so.primitive,), two_i)}
    for gen, (target, mono, sign) in isomap._ISO_IMAGES["v02"].items():
        coeff = noroot.scalar_mul(iso.j.eval_mono(*mono) * DualCoeff.scalar(sign))
        images[gen] = NCPoly.word((target,), coeff)
    bad = GenMap(images, NCPoly.const(so.one()))
    counts = _relation_residual_counts(iso, bad)
    assert counts[("H", "u1")] == 0
    assert counts[("H", "u2")] == 0
    assert counts[("u2", "u1")] > 0
