"""Hopf algebra maps between the two dual-algebra presentations.

For the variants whose primitive directions match (the mixed-scale and
second-scale families), the su-type presentation embeds into the
orthogonal-type one: the Cartan generator goes to a multiple of the
primitive generator, the other two generators pick up a square-root
normalization series, and the deformation parameters are related by a
quarter-turn rescaling.

The images stored here are already composed with the sign flip of the
two non-fixed generators on the target side.  Without that flip the raw
image set intertwines the opposite coproduct (and, dually, the inverse
antipode); a named check records this orientation fact instead of
sweeping it into the map.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from .freealg import (
    GenMap,
    NCPoly,
    TensorPoly,
    apply_map,
    counit_apply,
    tensor_normal_form,
)
from .reports import CheckReport, residual_item
from .scalar import (
    DualCoeff,
    GaussRational,
    JAssign,
    ZSeries,
    series_sqrt_one_plus,
    structure_fn,
)
from .uqalg import ALPHABET_SO, ALPHABET_SU, SoAlgebra, build_so, build_su, hopf_maps_so, hopf_maps_su
from .funq import variant

# parameter substitution: the su-side series variable becomes i/2 times
# the orthogonal-side one
_PARAM_SCALE = GaussRational(0, Fraction(1, 2))
_QUARTER_I = GaussRational(0, Fraction(-1, 4))

# non-Cartan images per variant: generator -> (target, scale exponents, sign)
_ISO_IMAGES: Dict[str, Dict[str, Tuple[str, Tuple[int, int], int]]] = {
    "v02": {"u1": ("X12", (2, 0), 1), "u2": ("X01", (0, 2), -1)},
    "v12": {"u1": ("X02", (0, 0), -1), "u2": ("X01", (0, 2), -1)},
}


def iso_covered(var) -> bool:
    return variant(var).name in _ISO_IMAGES


def normalization_series(alg: SoAlgebra) -> ZSeries:
    """z * exp(-i m z / 4) * sqrt(sin(m z / 2) * 2 / (m z)), the common
    factor carried by both non-Cartan images."""
    order = alg.order
    sinc_half = alg.sinc_half
    tail = sinc_half.shift_down(1).scalar_mul(2) - ZSeries.one(order)
    root = series_sqrt_one_plus(tail)
    quarter = structure_fn("exp", _QUARTER_I, alg.jf, order)
    return ZSeries.monomial(1, 1, order) * quarter * root


class IsoMap:
    """Composed presentation map at one scale assignment."""

    def __init__(self, var, j: JAssign, order: int):
        spec = variant(var)
        if spec.name not in _ISO_IMAGES:
            raise ValueError(
                f"no isomorphism images for variant {spec.name!r}; "
                f"covered: {sorted(_ISO_IMAGES)}"
            )
        self.spec = spec
        self.j = j
        self.order = order
        self.su = build_su(spec, j, order)
        self.so = build_so(spec, j, order)

        one = self.so.one()
        g = normalization_series(self.so)
        two_i = one.scalar_mul(DualCoeff.scalar(GaussRational(0, 2)))
        images = {"H": NCPoly.word((self.so.primitive,), two_i)}
        for gen, (target, mono, sign) in _ISO_IMAGES[spec.name].items():
            coeff = g.scalar_mul(j.eval_mono(*mono) * DualCoeff.scalar(sign))
            images[gen] = NCPoly.word((target,), coeff)
        self.map = GenMap(images, NCPoly.const(one))
        self.norm = g

    def push(self, p: NCPoly) -> NCPoly:
        """Substitute the parameter, map the words, normal-form."""
        moved = NCPoly(
            {w: c.subst_scale(_PARAM_SCALE) for w, c in p.terms.items()}
        )
        return self.so.nf(apply_map(self.map, moved))

    def push_tensor(self, tp: TensorPoly) -> TensorPoly:
        out: Dict[tuple, ZSeries] = {}
        for (w1, w2), c in tp.terms.items():
            p1 = self.map.of_word(w1)
            p2 = self.map.of_word(w2)
            cc = c.subst_scale(_PARAM_SCALE)
            for v1, c1 in p1.terms.items():
                for v2, c2 in p2.terms.items():
                    val = cc * c1 * c2
                    key = (v1, v2)
                    out[key] = out[key] + val if key in out else val
        return tensor_normal_form(TensorPoly(2, out), (self.so.rs, self.so.rs))


def reversing_flip(alg: SoAlgebra) -> GenMap:
    """Algebra automorphism negating the two rotation-like generators.

    It reverses the coproduct, so composing any straight presentation map
    with it produces one that intertwines the opposite coproduct, and
    conversely."""
    one = alg.one()
    images = {
        g: NCPoly.word((g,), one if g == "X01" else -one) for g in ALPHABET_SO
    }
    return GenMap(images, NCPoly.const(one))


def _tensor_flip(tp: TensorPoly) -> TensorPoly:
    return TensorPoly(2, {(w2, w1): c for (w1, w2), c in tp.terms.items()})


def verify_iso(var, j: JAssign, order: int = 6) -> CheckReport:
    """Relations, coproducts, counits and antipodes must all intertwine
    under the composed map; the raw map must intertwine the flipped
    coproduct instead."""
    iso = IsoMap(var, j, order)
    su, so = iso.su, iso.so
    rep = CheckReport("iso", "iso", iso.spec.name, j.token, order)
    one_su = su.one()

    # the square of the normalization series has a closed form
    expect_sq = (
        ZSeries.monomial(1, 2, order)
        * structure_fn("exp", GaussRational(0, Fraction(-1, 2)), so.jf, order)
        * so.sinc_half
    )
    residual_item(rep, "normalization-square", iso.norm * iso.norm - expect_sq)

    for lhs, rhs in sorted(su.rs.rules.items()):
        d = NCPoly.word(lhs, one_su) - rhs
        residual_item(rep, "relations-intertwine-" + ".".join(lhs), iso.push(d))

    delta_su, eps_su, anti_su = hopf_maps_su(su)
    delta_so, eps_so, anti_so = hopf_maps_so(so)

    # the su grouplike lands on the primitive exponential
    t_img = iso.push(su.cartan_exp(Fraction(1, 2)))
    residual_item(
        rep,
        "grouplike-image-matches-primitive-exponential",
        t_img - so.primitive_exp(Fraction(-1, 2)),
    )

    for g in ALPHABET_SU:
        lhs_t = iso.push_tensor(delta_su.images[g])
        rhs_t = tensor_normal_form(
            apply_map(delta_so, iso.push(su.gen(g))), (so.rs, so.rs)
        )
        residual_item(rep, f"coproducts-intertwine-{g}", lhs_t - rhs_t)
        residual_item(
            rep,
            f"counits-intertwine-{g}",
            eps_su[g].subst_scale(_PARAM_SCALE)
            - counit_apply(eps_so, iso.push(su.gen(g)), so.one()),
        )
        s_lhs = iso.push(apply_map(anti_su, su.gen(g)))
        s_rhs = so.nf(apply_map(anti_so, iso.push(su.gen(g))))
        residual_item(rep, f"antipodes-intertwine-{g}", s_lhs - s_rhs)

    # orientation of the raw (uncomposed) image set
    flip = reversing_flip(so)
    raw_images = {g: so.nf(apply_map(flip, p)) for g, p in iso.map.images.items()}
    raw = GenMap(raw_images, NCPoly.const(so.one()))
    flipped_ok = {}
    straight_ok = {}
    for g in ALPHABET_SU:
        moved = TensorPoly(
            2,
            {
                k: c.subst_scale(_PARAM_SCALE)
                for k, c in delta_su.images[g].terms.items()
            },
        )
        lhs_t = tensor_normal_form(
            _apply_tensor_map(raw, moved), (so.rs, so.rs)
        )
        rhs_raw = apply_map(delta_so, so.nf(apply_map(raw, _subst(su.gen(g)))))
        rhs_t = tensor_normal_form(rhs_raw, (so.rs, so.rs))
        straight_ok[g] = (lhs_t - rhs_t).is_zero()
        flipped_ok[g] = (lhs_t - _tensor_flip(rhs_t)).is_zero()
    # the strict straight-failure is a genericity statement: it only bites
    # when the deformation factor is invertible (dual values make the
    # asymmetric part nilpotent-small and the straight check vacuous)
    generic = iso.j.eval_mono(*iso.spec.deform).is_invertible()
    strict = (not straight_ok["u1"] and not straight_ok["u2"]) if generic else True
    rep.add(
        "raw-map-intertwines-opposite-coproduct",
        all(flipped_ok.values()) and strict,
        note="raw images match the flipped coproduct; composing with the "
        "reversing flip reorients them",
    )
    return rep


def _subst(p: NCPoly) -> NCPoly:
    return NCPoly({w: c.subst_scale(_PARAM_SCALE) for w, c in p.terms.items()})


def _apply_tensor_map(m: GenMap, tp: TensorPoly) -> TensorPoly:
    out: Dict[tuple, ZSeries] = {}
    for (w1, w2), c in tp.terms.items():
        p1 = m.of_word(w1)
        p2 = m.of_word(w2)
        for v1, c1 in p1.terms.items():
            for v2, c2 in p2.terms.items():
                val = c * c1 * c2
                key = (v1, v2)
                out[key] = out[key] + val if key in out else val
    return TensorPoly(2, out)
