"""Dual quantum algebras: the deformed enveloping algebras of the family.

Two presentations are covered.  The su-type presentation uses a Cartan
generator H and two rotated raising/lowering combinations u1, u2; its
exchange rules produce power series in H through the grouplike element
exp(z H / 2).  The orthogonal-type presentation uses the three primitive
rotation generators; each variant deforms the bracket in the direction of
its own primitive generator, replacing it by sinh-type series.

Same conventions as the function-algebra side: coefficients are exact
truncated series, scale assignments may send either contraction scale to
a nilpotent dual unit, and every claimed identity is normal-formed to
zero rather than compared numerically.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Tuple

from .freealg import (
    GenMap,
    NCPoly,
    RewriteSystem,
    TensorPoly,
    apply_map,
    counit_apply,
    nc_commutator,
    normal_form,
    tensor_apply_slot,
    tensor_contract_multiply,
    tensor_counit_contract,
    tensor_normal_form,
)
from .funq import VARIANTS, VariantSpec, variant
from .reports import CheckReport, residual_item
from .scalar import (
    DualCoeff,
    GR_I,
    GR_ONE,
    GaussRational,
    JAssign,
    JSeries,
    ZSeries,
    gr,
    jseries_structure_fn,
    structure_fn,
)

ALPHABET_SU: Tuple[str, ...] = ("u1", "u2", "H")
ALPHABET_SO: Tuple[str, ...] = ("X01", "X02", "X12")

# which generator each variant keeps primitive on the orthogonal side
SO_PRIMITIVE = {"v02": "X02", "v12": "X12", "v01": "X01"}

# contraction scale carried by each orthogonal generator, as exponents
SO_SCALE: Dict[str, Tuple[int, int]] = {
    "X01": (1, 0),
    "X02": (1, 1),
    "X12": (0, 1),
}

_I = DualCoeff.scalar(GR_I)
_MI = DualCoeff.scalar(GaussRational(0, -1))
_HALF_I = GaussRational(0, Fraction(1, 2))


def exp_gen(sym: str, coef, order: int) -> NCPoly:
    """exp(coef * z * sym) with the z-power carried by the coefficient."""
    g = gr(coef)
    terms = {}
    p = GR_ONE
    for m in range(order + 1):
        if m:
            p = p * g
        if p.is_zero():
            break
        c = p * gr(Fraction(1, factorial(m)))
        terms[(sym,) * m] = ZSeries.monomial(m, c, order)
    return NCPoly(terms)


def _gen_series(sym: str, kind: str, order: int) -> NCPoly:
    """sinh-type series in a generator: sum z^{2k} sym^{2k+1} / (2k+1)!."""
    assert kind == "sinh_over_z"
    terms = {}
    k = 0
    while 2 * k <= order:
        c = ZSeries.monomial(2 * k, Fraction(1, factorial(2 * k + 1)), order)
        terms[(sym,) * (2 * k + 1)] = c
        k += 1
    return NCPoly(terms)


# ---------------------------------------------------------------------------
# su-type presentation


class SuAlgebra:
    """Deformed enveloping algebra in the Cartan-plus-rotations basis."""

    def __init__(self, spec: VariantSpec, j: JAssign, order: int):
        self.variant = spec
        self.j = j
        self.order = order

        self.jf = j.eval_mono(*spec.deform)
        self.g1 = j.eval_mono(*spec.ratio_b2)  # multiplies u2 in the H-u1 rule
        self.g2 = j.eval_mono(*spec.ratio_b1)
        self.sig1 = j.eval_mono(*spec.scale_b1)
        self.sig2 = j.eval_mono(*spec.scale_b2)
        self.sig12 = self.sig1 * self.sig2

        self.cosh = structure_fn("cosh", 1, self.jf, order)
        self.sinh = structure_fn("sinh", 1, self.jf, order)
        self.sinhc = structure_fn("sinhc", 1, self.jf, order)
        self.exp_plus = structure_fn("exp", 1, self.jf, order)
        self.exp_minus = structure_fn("exp", -1, self.jf, order)

        self.rs = RewriteSystem(ALPHABET_SU, self._rules())

    def _rules(self) -> Dict[Tuple[str, str], NCPoly]:
        w = NCPoly.word
        one = self.one()
        two_i = DualCoeff.scalar(GaussRational(0, 2))
        rules = {
            ("H", "u1"): w(("u1", "H"), one)
            + w(("u2",), one.scalar_mul(-(self.g1 * two_i))),
            ("H", "u2"): w(("u2", "H"), one)
            + w(("u1",), one.scalar_mul(self.g2 * two_i)),
        }
        # the u-u bracket closes on the grouplike combination
        # exp(zH) - exp(-zH), expanded into H powers
        c = (self.exp_minus * self.sinh).scalar_mul(self.sig12 * _I)
        rhs = w(("u1", "u2"), one)
        if not c.is_zero():
            m = 1
            while m <= self.order:
                zm = ZSeries.monomial(m, Fraction(2, factorial(m)), self.order)
                coeff = c * zm
                if not coeff.is_zero():
                    rhs = rhs + w(("H",) * m, coeff)
                m += 2
        rules[("u2", "u1")] = rhs
        return rules

    def one(self) -> ZSeries:
        return ZSeries.one(self.order)

    def zero(self) -> ZSeries:
        return ZSeries.zero(self.order)

    def gen(self, sym: str) -> NCPoly:
        if sym not in ALPHABET_SU:
            raise KeyError(sym)
        return NCPoly.gen(sym, self.one())

    def nf(self, p: NCPoly) -> NCPoly:
        return normal_form(p, self.rs)

    def cartan_exp(self, coef) -> NCPoly:
        """Grouplike exp(coef * z * H)."""
        return exp_gen("H", coef, self.order)


@lru_cache(maxsize=None)
def _build_su_cached(name: str, j: JAssign, order: int) -> SuAlgebra:
    return SuAlgebra(VARIANTS[name], j, order)


def build_su(var, j: JAssign, order: int = 8) -> SuAlgebra:
    return _build_su_cached(variant(var).name, j, order)


def hopf_maps_su(alg: SuAlgebra):
    one = alg.one()
    zero = alg.zero()
    t = alg.cartan_exp(Fraction(1, 2))
    tinv = alg.cartan_exp(Fraction(-1, 2))

    def left(poly: NCPoly, sym: str) -> TensorPoly:
        return TensorPoly(2, {(w, (sym,)): c for w, c in poly.terms.items()})

    def right(sym: str, poly: NCPoly) -> TensorPoly:
        return TensorPoly(2, {((sym,), w): c for w, c in poly.terms.items()})

    delta_images = {
        "H": TensorPoly(2, {(("H",), ()): one, ((), ("H",)): one}),
        "u1": left(t, "u1") + right("u1", tinv),
        "u2": left(t, "u2") + right("u2", tinv),
    }
    delta = GenMap(delta_images, TensorPoly.one(2, one))

    eps = {"H": zero, "u1": zero, "u2": zero}

    w = NCPoly.word
    s_images = {
        "H": w(("H",), -one),
        "u1": w(("u1",), -alg.cosh) + w(("u2",), alg.sinhc.scalar_mul(alg.g1 * _MI)),
        "u2": w(("u2",), -alg.cosh) + w(("u1",), alg.sinhc.scalar_mul(alg.g2 * _I)),
    }
    antipode = GenMap(s_images, NCPoly.const(one), antihom=True)
    return delta, eps, antipode


def su_conjugation_check(alg: SuAlgebra) -> CheckReport:
    """Closed form of conjugation by the grouplike element, and the
    antipode as its negative."""
    rep = CheckReport("conjugation", "su", alg.variant.name, alg.j.token, alg.order)
    t = alg.cartan_exp(Fraction(1, 2))
    tinv = alg.cartan_exp(Fraction(-1, 2))
    w = NCPoly.word

    residual_item(rep, "grouplike-inverse", alg.nf(tinv * t) - NCPoly.const(alg.one()))

    expected = {
        "u1": w(("u1",), alg.cosh) + w(("u2",), alg.sinhc.scalar_mul(alg.g1 * _I)),
        "u2": w(("u2",), alg.cosh) + w(("u1",), alg.sinhc.scalar_mul(alg.g2 * _MI)),
    }
    _, _, antipode = hopf_maps_su(alg)
    for g in ("u1", "u2"):
        conj = alg.nf(tinv * alg.gen(g) * t)
        residual_item(rep, f"conjugation-closed-form-{g}", conj - expected[g])
        residual_item(
            rep,
            f"antipode-is-negative-conjugation-{g}",
            alg.nf(apply_map(antipode, alg.gen(g))) + conj,
        )

    # the scale-weighted combination rescales by a plain exponential
    combo = (
        alg.gen("u1").scalar_mul(alg.one().scalar_mul(alg.sig2))
        + alg.gen("u2").scalar_mul(alg.one().scalar_mul(alg.sig1 * _I))
    )
    s_combo = apply_map(antipode, combo)
    expected_combo = NCPoly(
        {w_: -(c * alg.exp_plus) for w_, c in combo.terms.items()}
    )
    residual_item(rep, "weighted-combination-antipode", s_combo - expected_combo)
    return rep


def hopf_axiom_report_su(var, j: JAssign, order: int = 8) -> CheckReport:
    spec = variant(var)
    alg = build_su(spec, j, order)
    delta, eps, antipode = hopf_maps_su(alg)
    one = alg.one()
    rep = CheckReport("hopf-su", "su", spec.name, j.token, order)
    pair = (alg.rs, alg.rs)

    for lhs, rhs in sorted(alg.rs.rules.items()):
        d = NCPoly.word(lhs, one) - rhs
        tag = ".".join(lhs)
        residual_item(
            rep,
            f"coproduct-respects-{tag}",
            tensor_normal_form(apply_map(delta, d), pair),
        )
        residual_item(rep, f"counit-respects-{tag}", counit_apply(eps, d, one))
        residual_item(rep, f"antipode-respects-{tag}", alg.nf(apply_map(antipode, d)))

    for g in ALPHABET_SU:
        dg = delta.images[g]
        residual_item(
            rep,
            f"coassociativity-{g}",
            tensor_apply_slot(delta, dg, 0) - tensor_apply_slot(delta, dg, 1),
        )
        residual_item(
            rep,
            f"counit-axiom-{g}",
            [
                tensor_counit_contract(eps, dg, 0, one) - alg.gen(g),
                tensor_counit_contract(eps, dg, 1, one) - alg.gen(g),
            ],
        )
        residual_item(
            rep,
            f"antipode-axiom-{g}",
            [
                alg.nf(tensor_contract_multiply(dg, (antipode, None), one)),
                alg.nf(tensor_contract_multiply(dg, (None, antipode), one)),
            ],
        )

    for item in su_conjugation_check(alg).items:
        rep.items.append(item)
    return rep


# ---------------------------------------------------------------------------
# orthogonal-type presentation


class SoAlgebra:
    """Deformed rotation algebra; the variant's primitive generator keeps a
    linear coproduct while the bracket opposite to it becomes a series."""

    def __init__(self, spec: VariantSpec, j: JAssign, order: int):
        self.variant = spec
        self.j = j
        self.order = order
        self.primitive = SO_PRIMITIVE[spec.name]

        self.jf = j.eval_mono(*spec.deform)
        self.j1sq = j.eval_mono(2, 0)
        self.j2sq = j.eval_mono(0, 2)

        self.cos_half = structure_fn("cosh", _HALF_I, self.jf, order)
        # sin(multiplier * z / 2) / multiplier, division-free
        self.sinc_half = structure_fn("sinhc", _HALF_I, self.jf, order).scalar_mul(_MI)

        self.rs = RewriteSystem(ALPHABET_SO, self._rules())

    def _rules(self) -> Dict[Tuple[str, str], NCPoly]:
        w = NCPoly.word
        one = self.one()

        def output(sym: str, coef: DualCoeff) -> NCPoly:
            if sym == self.primitive:
                body = _gen_series(sym, "sinh_over_z", self.order)
            else:
                body = NCPoly.gen(sym, one)
            return body.scalar_mul(one.scalar_mul(coef)) if coef != DualCoeff.scalar(1) else body

        return {
            ("X02", "X01"): w(("X01", "X02"), one) - output("X12", self.j1sq),
            ("X12", "X02"): w(("X02", "X12"), one) - output("X01", self.j2sq),
            ("X12", "X01"): w(("X01", "X12"), one) + output("X02", DualCoeff.scalar(1)),
        }

    def one(self) -> ZSeries:
        return ZSeries.one(self.order)

    def zero(self) -> ZSeries:
        return ZSeries.zero(self.order)

    def gen(self, sym: str) -> NCPoly:
        if sym not in ALPHABET_SO:
            raise KeyError(sym)
        return NCPoly.gen(sym, self.one())

    def nf(self, p: NCPoly) -> NCPoly:
        return normal_form(p, self.rs)

    def primitive_exp(self, coef) -> NCPoly:
        return exp_gen(self.primitive, coef, self.order)


@lru_cache(maxsize=None)
def _build_so_cached(name: str, j: JAssign, order: int) -> SoAlgebra:
    return SoAlgebra(VARIANTS[name], j, order)


def build_so(var, j: JAssign, order: int = 8) -> SoAlgebra:
    return _build_so_cached(variant(var).name, j, order)


def hopf_maps_so(alg: SoAlgebra):
    one = alg.one()
    zero = alg.zero()
    e_minus = alg.primitive_exp(Fraction(-1, 2))
    e_plus = alg.primitive_exp(Fraction(1, 2))
    p = alg.primitive

    delta_images = {}
    for g in ALPHABET_SO:
        if g == p:
            delta_images[g] = TensorPoly(2, {((g,), ()): one, ((), (g,)): one})
        else:
            delta_images[g] = TensorPoly(
                2,
                {
                    **{(w, (g,)): c for w, c in e_minus.terms.items()},
                },
            ) + TensorPoly(2, {((g,), w): c for w, c in e_plus.terms.items()})
    delta = GenMap(delta_images, TensorPoly.one(2, one))

    eps = {g: zero for g in ALPHABET_SO}

    w = NCPoly.word
    cos, sinc = alg.cos_half, alg.sinc_half
    name = alg.variant.name
    if name == "v02":
        s_images = {
            "X02": w(("X02",), -one),
            "X01": w(("X01",), -cos) + w(("X12",), sinc.scalar_mul(alg.j1sq)),
            "X12": w(("X12",), -cos) - w(("X01",), sinc.scalar_mul(alg.j2sq)),
        }
    elif name == "v12":
        s_images = {
            "X12": w(("X12",), -one),
            "X01": w(("X01",), -cos) - w(("X02",), sinc),
            "X02": w(("X02",), -cos) + w(("X01",), sinc.scalar_mul(alg.j2sq)),
        }
    else:
        s_images = {
            "X01": w(("X01",), -one),
            "X02": w(("X02",), -cos) - w(("X12",), sinc.scalar_mul(alg.j1sq)),
            "X12": w(("X12",), -cos) + w(("X02",), sinc),
        }
    antipode = GenMap(s_images, NCPoly.const(one), antihom=True)
    return delta, eps, antipode


def so_conjugation_check(alg: SoAlgebra) -> CheckReport:
    """Antipode equals negative conjugation by the primitive exponential."""
    rep = CheckReport("conjugation", "so", alg.variant.name, alg.j.token, alg.order)
    e_minus = alg.primitive_exp(Fraction(-1, 2))
    e_plus = alg.primitive_exp(Fraction(1, 2))
    _, _, antipode = hopf_maps_so(alg)
    residual_item(
        rep, "grouplike-inverse", alg.nf(e_plus * e_minus) - NCPoly.const(alg.one())
    )
    for g in ALPHABET_SO:
        conj = alg.nf(e_plus * alg.gen(g) * e_minus)
        residual_item(
            rep,
            f"antipode-is-negative-conjugation-{g}",
            alg.nf(apply_map(antipode, alg.gen(g))) + conj,
        )
    return rep


def jacobi_residual(alg: SoAlgebra) -> NCPoly:
    x, y, z = (alg.gen(s) for s in ALPHABET_SO)
    rs = alg.rs

    def br(a, b):
        return nc_commutator(a, b, rs)

    return alg.nf(br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y))


def hopf_axiom_report_so(var, j: JAssign, order: int = 8) -> CheckReport:
    spec = variant(var)
    alg = build_so(spec, j, order)
    delta, eps, antipode = hopf_maps_so(alg)
    one = alg.one()
    rep = CheckReport("hopf-so", "so", spec.name, j.token, order)
    pair = (alg.rs, alg.rs)

    for lhs, rhs in sorted(alg.rs.rules.items()):
        d = NCPoly.word(lhs, one) - rhs
        tag = ".".join(lhs)
        residual_item(
            rep,
            f"coproduct-respects-{tag}",
            tensor_normal_form(apply_map(delta, d), pair),
        )
        residual_item(rep, f"counit-respects-{tag}", counit_apply(eps, d, one))
        residual_item(rep, f"antipode-respects-{tag}", alg.nf(apply_map(antipode, d)))

    for g in ALPHABET_SO:
        dg = delta.images[g]
        residual_item(
            rep,
            f"coassociativity-{g}",
            tensor_apply_slot(delta, dg, 0) - tensor_apply_slot(delta, dg, 1),
        )
        residual_item(
            rep,
            f"counit-axiom-{g}",
            [
                tensor_counit_contract(eps, dg, 0, one) - alg.gen(g),
                tensor_counit_contract(eps, dg, 1, one) - alg.gen(g),
            ],
        )
        residual_item(
            rep,
            f"antipode-axiom-{g}",
            [
                alg.nf(tensor_contract_multiply(dg, (antipode, None), one)),
                alg.nf(tensor_contract_multiply(dg, (None, antipode), one)),
            ],
        )

    residual_item(rep, "jacobi", jacobi_residual(alg))
    for item in so_conjugation_check(alg).items:
        rep.items.append(item)
    return rep


# ---------------------------------------------------------------------------
# contraction checks for both presentations

def _su_standard_relations(order: int) -> List[NCPoly]:
    w = NCPoly.word
    one = JSeries.one(order)
    two_i = GaussRational(0, 2)
    em = jseries_structure_fn("exp", -1, 0, 0, order)
    sh = jseries_structure_fn("sinh", 1, 0, 0, order)
    rels = [
        w(("H", "u1"), one) - w(("u1", "H"), one) + w(("u2",), JSeries.term(0, two_i, 0, 0, order)),
        w(("H", "u2"), one) - w(("u2", "H"), one) - w(("u1",), JSeries.term(0, two_i, 0, 0, order)),
    ]
    r3 = w(("u2", "u1"), one) - w(("u1", "u2"), one)
    c = (em * sh).scalar_mul(GR_I)
    m = 1
    while m <= order:
        zm = JSeries.term(m, Fraction(2, factorial(m)), 0, 0, order)
        r3 = r3 - w(("H",) * m, c * zm)
        m += 2
    rels.append(r3)
    return rels


def _so_standard_relations(name: str, order: int) -> List[NCPoly]:
    w = NCPoly.word
    one = JSeries.one(order)
    primitive = SO_PRIMITIVE[name]

    def output(sym: str) -> NCPoly:
        if sym == primitive:
            terms = {}
            k = 0
            while 2 * k <= order:
                terms[(sym,) * (2 * k + 1)] = JSeries.term(
                    2 * k, Fraction(1, factorial(2 * k + 1)), 0, 0, order
                )
                k += 1
            return NCPoly(terms)
        return NCPoly.gen(sym, one)

    return [
        w(("X02", "X01"), one) - w(("X01", "X02"), one) + output("X12"),
        w(("X12", "X02"), one) - w(("X02", "X12"), one) + output("X01"),
        w(("X12", "X01"), one) - w(("X01", "X12"), one) - output("X02"),
    ]


def _transport_relation(p: NCPoly, deform: Tuple[int, int],
                        scale_map: Dict[str, Tuple[int, int]]) -> NCPoly:
    """Reparametrize z and divide each generator by its scale, then clear
    the overall Laurent monomial so the result survives nilpotent values."""
    terms: Dict[tuple, JSeries] = {}
    for word, c in p.terms.items():
        c2 = c.subst_scale_mono(1, *deform)
        for sym in word:
            e1, e2 = scale_map[sym]
            c2 = c2.mul_mono(-e1, -e2)
        terms[word] = terms[word] + c2 if word in terms else c2
    mins = []
    for c in terms.values():
        if not c.is_zero():
            _, mono = c.clear_min()
            mins.append(mono)
    if mins:
        e1 = min(m[0] for m in mins)
        e2 = min(m[1] for m in mins)
        terms = {word: c.mul_mono(-e1, -e2) for word, c in terms.items()}
    return NCPoly(terms)


def verify_contraction_alg(family: str, var, j: JAssign, order: int = 8) -> CheckReport:
    """Transported images of the unscaled relations must normal-form to
    zero in the contracted algebra, at this order and two orders higher."""
    spec = variant(var)
    rep = CheckReport("contraction", family, spec.name, j.token, order)
    if family == "su":
        scale_map = {
            "H": spec.deform,
            "u1": spec.scale_b1,
            "u2": spec.scale_b2,
        }
        rel_builder = lambda n: _su_standard_relations(n)
        build = build_su
    elif family == "so":
        scale_map = dict(SO_SCALE)
        rel_builder = lambda n: _so_standard_relations(spec.name, n)
        build = build_so
    else:
        raise ValueError(f"unknown family {family!r}")

    for n in (order, order + 2):
        alg = build(spec, j, n)
        for k, rel in enumerate(rel_builder(n)):
            moved = _transport_relation(rel, spec.deform, scale_map)
            nc = NCPoly({w: c.specialize(j) for w, c in moved.terms.items()})
            residual_item(rep, f"relation-{k}-N{n}", alg.nf(nc))
    return rep


def confluence_report_alg(family: str, var, j: JAssign, order: int = 4,
                          maxlen: int = 3) -> CheckReport:
    spec = variant(var)
    if family == "su":
        alg = build_su(spec, j, order)
    elif family == "so":
        alg = build_so(spec, j, order)
    else:
        raise ValueError(f"unknown family {family!r}")
    from .freealg import critical_pairs_check

    rep = CheckReport("confluence", family, spec.name, j.token, order, maxlen=maxlen)
    res = critical_pairs_check(alg.rs, maxlen)
    rep.add(
        "joinable-overlaps",
        res.ok,
        note="" if res.ok else f"first failure at {res.failures[0][0]}",
    )
    rep.info["words_checked"] = res.words_checked
    return rep


# ---------------------------------------------------------------------------
# special scale assignments of the orthogonal presentation


def map_respects_relations(src: SoAlgebra, dst: SoAlgebra, images: Dict[str, NCPoly]) -> bool:
    """True when the generator map sends every defining relation of the
    source into the ideal of the destination."""
    m = GenMap(images, NCPoly.const(dst.one()))
    one = src.one()
    for lhs, rhs in src.rs.rules.items():
        d = NCPoly.word(lhs, one) - rhs
        if not normal_form(apply_map(m, d), dst.rs).is_zero():
            return False
    return True


def signed_permutation_isos(src: SoAlgebra, dst: SoAlgebra) -> List[dict]:
    """All signed generator permutations carrying src relations into dst."""
    found = []
    one = dst.one()
    for perm in itertools.permutations(ALPHABET_SO):
        for signs in itertools.product((1, -1), repeat=3):
            images = {
                g: NCPoly.word((tgt,), one if s > 0 else -one)
                for g, tgt, s in zip(ALPHABET_SO, perm, signs)
            }
            if map_respects_relations(src, dst, images):
                found.append({g: (t, s) for g, t, s in zip(ALPHABET_SO, perm, signs)})
    return found


def special_case_report(order: int = 8) -> CheckReport:
    """Behavior at the half-dual and fully dual scale assignments: which
    couplings survive, whether the deformation parameter is rescaled, and
    the signed-permutation matches between fully dual variants."""
    rep = CheckReport("special-cases", "so", "all", "i1,1;i1,i2", order)
    w = NCPoly.word

    def rules_residual(alg: SoAlgebra, expected: Dict[Tuple[str, str], NCPoly]):
        out = []
        for lhs, rhs in expected.items():
            out.append(alg.rs.rules[lhs] - rhs)
        return out

    j_half = JAssign.parse("i1,1")
    j_full = JAssign.parse("i1,i2")

    # half-dual, variant keeping its parameter: plain deformed euclidean shape
    alg = build_so("v12", j_half, order)
    one = alg.one()
    expected = {
        ("X02", "X01"): w(("X01", "X02"), one),
        ("X12", "X02"): w(("X02", "X12"), one) - w(("X01",), one),
        ("X12", "X01"): w(("X01", "X12"), one) + w(("X02",), one),
    }
    residual_item(rep, "half-dual-v12-euclidean-shape", rules_residual(alg, expected))
    rep.info["parameter_rescaled.v12@i1,1"] = not alg.jf == DualCoeff.scalar(1)

    # half-dual, variant whose parameter is dragged into the dual range
    alg = build_so("v01", j_half, order)
    one = alg.one()
    expected = {
        ("X02", "X01"): w(("X01", "X02"), one),
        ("X12", "X02"): w(("X02", "X12"), one) - _gen_series("X01", "sinh_over_z", order),
        ("X12", "X01"): w(("X01", "X12"), one) + w(("X02",), one),
    }
    residual_item(rep, "half-dual-v01-euclidean-shape", rules_residual(alg, expected))
    rep.info["parameter_rescaled.v01@i1,1"] = not alg.jf == DualCoeff.scalar(1)

    # fully dual: all three variants flatten to a central-extension shape
    for name in ("v02", "v12", "v01"):
        alg = build_so(name, j_full, order)
        one = alg.one()
        if name == "v02":
            last = _gen_series("X02", "sinh_over_z", order)
        else:
            last = w(("X02",), one)
        expected = {
            ("X02", "X01"): w(("X01", "X02"), one),
            ("X12", "X02"): w(("X02", "X12"), one),
            ("X12", "X01"): w(("X01", "X12"), one) + last,
        }
        residual_item(rep, f"fully-dual-{name}-flattened-shape",
                      rules_residual(alg, expected))
        rep.info[f"parameter_rescaled.{name}@i1,i2"] = not alg.jf == DualCoeff.scalar(1)

    # the two linear fully dual variants agree up to signed permutation
    src = build_so("v01", j_full, order)
    dst = build_so("v12", j_full, order)
    isos = signed_permutation_isos(src, dst)
    identity = {g: (g, 1) for g in ALPHABET_SO}
    rep.add("fully-dual-signed-permutation-isos", bool(isos) and identity in isos)
    rep.info["signed_permutation_count"] = len(isos)
    rep.info["identity_map_included"] = identity in isos
    return rep
