"""Noncommutative polynomials over series coefficients, with rewriting.

Words over a declared generator alphabet carry duck-typed coefficients
(ZSeries in the algebras, JSeries during symbolic eliminations).  Oriented
two-letter rules define normal forms; termination is guarded by a
degree-lex decrease or a strict gain in coefficient valuation per rewrite,
plus a global step budget.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

Word = Tuple[str, ...]

DEFAULT_STEP_BUDGET = 10 ** 6


def step_budget() -> int:
    """Reduction step budget, overridable through CKQ_STEP_BUDGET."""
    raw = os.environ.get("CKQ_STEP_BUDGET")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return DEFAULT_STEP_BUDGET


class ReductionBudgetExceeded(RuntimeError):
    """Raised when a normal-form computation exceeds the step budget."""


class NCPoly:
    """Finite linear combination of words with ring coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] = ()):
        self.terms = {
            w: c for w, c in dict(terms).items() if not c.is_zero()
        }

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls({})

    @classmethod
    def const(cls, coeff) -> "NCPoly":
        return cls({(): coeff})

    @classmethod
    def gen(cls, sym: str, one) -> "NCPoly":
        return cls({(sym,): one})

    @classmethod
    def word(cls, w: Word, coeff) -> "NCPoly":
        return cls({tuple(w): coeff})

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            cur = out.get(w)
            nv = cur + c if cur is not None else c
            if nv.is_zero():
                out.pop(w, None)
            else:
                out[w] = nv
        return NCPoly._wrap(out)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            cur = out.get(w)
            nv = cur - c if cur is not None else -c
            if nv.is_zero():
                out.pop(w, None)
            else:
                out[w] = nv
        return NCPoly._wrap(out)

    def __neg__(self) -> "NCPoly":
        return NCPoly._wrap({w: -c for w, c in self.terms.items()})

    def __mul__(self, other: "NCPoly") -> "NCPoly":
        out: Dict[Word, object] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                if c.is_zero():
                    continue
                w = w1 + w2
                cur = out.get(w)
                nv = cur + c if cur is not None else c
                if nv.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = nv
        return NCPoly._wrap(out)

    def scalar_mul(self, coeff) -> "NCPoly":
        if coeff.is_zero():
            return NCPoly.zero()
        return NCPoly._wrap({w: c * coeff for w, c in self.terms.items()})

    @classmethod
    def _wrap(cls, terms: dict) -> "NCPoly":
        v = object.__new__(cls)
        v.terms = {w: c for w, c in terms.items() if not c.is_zero()}
        return v

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: Word):
        return self.terms.get(tuple(w))

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "NCPoly(0)"
        bits = [f"({c!s})*{'.'.join(w) if w else '1'}" for w, c in sorted(self.terms.items())]
        return "NCPoly[" + " + ".join(bits) + "]"


class TensorPoly:
    """Linear combination of word tuples; factors multiply componentwise."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Tuple[Word, ...], object] = ()):
        self.arity = arity
        self.terms = {
            ws: c for ws, c in dict(terms).items() if not c.is_zero()
        }

    @classmethod
    def zero(cls, arity: int) -> "TensorPoly":
        return cls(arity, {})

    @classmethod
    def one(cls, arity: int, coeff_one) -> "TensorPoly":
        return cls(arity, {tuple(() for _ in range(arity)): coeff_one})

    @classmethod
    def _wrap(cls, arity: int, terms: dict) -> "TensorPoly":
        v = object.__new__(cls)
        v.arity = arity
        v.terms = {ws: c for ws, c in terms.items() if not c.is_zero()}
        return v

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        self._check(other)
        out = dict(self.terms)
        for ws, c in other.terms.items():
            cur = out.get(ws)
            nv = cur + c if cur is not None else c
            if nv.is_zero():
                out.pop(ws, None)
            else:
                out[ws] = nv
        return TensorPoly._wrap(self.arity, out)

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + (-other)

    def __neg__(self) -> "TensorPoly":
        return TensorPoly._wrap(
            self.arity, {ws: -c for ws, c in self.terms.items()}
        )

    def _check(self, other: "TensorPoly"):
        if self.arity != other.arity:
            raise ValueError("tensor arity mismatch")

    def __mul__(self, other: "TensorPoly") -> "TensorPoly":
        self._check(other)
        out: Dict[Tuple[Word, ...], object] = {}
        for ws1, c1 in self.terms.items():
            for ws2, c2 in other.terms.items():
                c = c1 * c2
                if c.is_zero():
                    continue
                ws = tuple(a + b for a, b in zip(ws1, ws2))
                cur = out.get(ws)
                nv = cur + c if cur is not None else c
                if nv.is_zero():
                    out.pop(ws, None)
                else:
                    out[ws] = nv
        return TensorPoly._wrap(self.arity, out)

    def scalar_mul(self, coeff) -> "TensorPoly":
        if coeff.is_zero():
            return TensorPoly.zero(self.arity)
        return TensorPoly._wrap(
            self.arity, {ws: c * coeff for ws, c in self.terms.items()}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorPoly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return f"TensorPoly({self.arity}, 0)"
        bits = [
            f"({c!s})*" + "(x)".join(".".join(w) if w else "1" for w in ws)
            for ws, c in sorted(self.terms.items())
        ]
        return "TensorPoly[" + " + ".join(bits) + "]"


def tensor_mul(s: TensorPoly, t: TensorPoly) -> TensorPoly:
    """Componentwise product of tensor polynomials of equal arity."""
    return s * t


def deglex_less(a: Word, b: Word, rank: Mapping[str, int]) -> bool:
    """Degree-lexicographic comparison under the alphabet precedence."""
    if len(a) != len(b):
        return len(a) < len(b)
    for x, y in zip(a, b):
        rx, ry = rank[x], rank[y]
        if rx != ry:
            return rx < ry
    return False


@dataclass(frozen=True)
class RewriteSystem:
    """Oriented two-letter rules over a precedence-ordered alphabet.

    Every rule must shrink: each right-hand term is either strictly
    degree-lex smaller than the left word or carries a coefficient of
    valuation >= 1, so iterated rewriting drains into lower words or
    higher series order and terminates.  Rules listed in measure_exempt
    opt out of that check; their construction site must supply its own
    termination argument.
    """

    alphabet: Tuple[str, ...]
    rules: Mapping[Word, NCPoly]
    measure_exempt: frozenset = frozenset()

    def __post_init__(self):
        rank = self.rank()
        for lhs, rhs in self.rules.items():
            if len(lhs) != 2:
                raise ValueError(f"rule left side must be two letters: {lhs}")
            if lhs in self.measure_exempt:
                continue
            for w, c in rhs.terms.items():
                if deglex_less(w, lhs, rank):
                    continue
                val = c.valuation()
                if val is None or val >= 1:
                    continue
                raise ValueError(
                    f"rule {lhs} -> ... term {w} neither shrinks nor gains valuation"
                )

    def rank(self) -> Dict[str, int]:
        return {s: i for i, s in enumerate(self.alphabet)}

    def first_redex(self, w: Word) -> Optional[int]:
        for i in range(len(w) - 1):
            if w[i : i + 2] in self.rules:
                return i
        return None

    def reduce_once_at(self, w: Word, coeff, pos: int) -> NCPoly:
        rhs = self.rules[w[pos : pos + 2]]
        pre, post = w[:pos], w[pos + 2 :]
        out: Dict[Word, object] = {}
        for w2, c2 in rhs.terms.items():
            c = coeff * c2
            if c.is_zero():
                continue
            nw = pre + w2 + post
            cur = out.get(nw)
            nv = cur + c if cur is not None else c
            if nv.is_zero():
                out.pop(nw, None)
            else:
                out[nw] = nv
        return NCPoly._wrap(out)


def normal_form(p: NCPoly, rs: RewriteSystem, budget: Optional[int] = None) -> NCPoly:
    """Reduce every reducible subword until none remains."""
    remaining = step_budget() if budget is None else budget
    work = dict(p.terms)
    out: Dict[Word, object] = {}
    while work:
        w, c = work.popitem()
        if c.is_zero():
            continue
        pos = rs.first_redex(w)
        if pos is None:
            cur = out.get(w)
            nv = cur + c if cur is not None else c
            if nv.is_zero():
                out.pop(w, None)
            else:
                out[w] = nv
            continue
        remaining -= 1
        if remaining < 0:
            raise ReductionBudgetExceeded(
                "step budget exhausted; a rule orientation is likely non-terminating"
            )
        rhs = rs.rules[w[pos : pos + 2]]
        pre, post = w[:pos], w[pos + 2 :]
        for w2, c2 in rhs.terms.items():
            nc = c * c2
            if nc.is_zero():
                continue
            nw = pre + w2 + post
            cur = work.get(nw)
            nv = cur + nc if cur is not None else nc
            if nv.is_zero():
                work.pop(nw, None)
            else:
                work[nw] = nv
    return NCPoly._wrap(out)


def nc_commutator(x: NCPoly, y: NCPoly, rs: RewriteSystem) -> NCPoly:
    """Normal form of x*y - y*x."""
    return normal_form(x * y - y * x, rs)


def tensor_normal_form(
    tp: TensorPoly, systems: Sequence[RewriteSystem]
) -> TensorPoly:
    """Normal-form every tensor slot independently and recombine."""
    if len(systems) != tp.arity:
        raise ValueError("one rewrite system per tensor slot required")
    total = TensorPoly.zero(tp.arity)
    for ws, c in tp.terms.items():
        partial = {(): c}
        for slot, w in enumerate(ws):
            # reduce the bare word; the coefficient is carried separately
            reduced = normal_form(NCPoly.word(w, _one_like(c)), systems[slot])
            nxt: Dict[Tuple[Word, ...], object] = {}
            for prefix, pc in partial.items():
                for rw, rc in reduced.terms.items():
                    nc = pc * rc
                    if nc.is_zero():
                        continue
                    key = prefix + (rw,)
                    cur = nxt.get(key)
                    nv = cur + nc if cur is not None else nc
                    if nv.is_zero():
                        nxt.pop(key, None)
                    else:
                        nxt[key] = nv
            partial = nxt
            if not partial:
                break
        total = total + TensorPoly._wrap(tp.arity, dict(partial))
    return total


def _one_like(coeff):
    # multiplicative unit in the coefficient ring of the given element
    from .scalar import JSeries, ZSeries

    if isinstance(coeff, ZSeries):
        return ZSeries.one(coeff.order)
    if isinstance(coeff, JSeries):
        return JSeries.one(coeff.order)
    raise TypeError(f"no unit known for coefficient type {type(coeff)!r}")


@dataclass(frozen=True)
class GenMap:
    """Generator images extended to words as a (anti)homomorphism."""

    images: Mapping[str, object]
    unit: object  # image of the empty word (NCPoly or TensorPoly one)
    antihom: bool = False

    def of_word(self, w: Word):
        out = self.unit
        letters = reversed(w) if self.antihom else w
        for sym in letters:
            img = self.images.get(sym)
            if img is None:
                raise KeyError(f"no image for generator {sym!r}")
            out = out * img
        return out


def apply_map(m: GenMap, p: NCPoly):
    """Linear extension of a generator map to a polynomial."""
    total = None
    for w, c in p.terms.items():
        piece = m.of_word(w).scalar_mul(c)
        total = piece if total is None else total + piece
    if total is None:
        if isinstance(m.unit, TensorPoly):
            return TensorPoly.zero(m.unit.arity)
        return NCPoly.zero()
    return total


def counit_apply(eps: Mapping[str, object], p: NCPoly, one):
    """Apply a counit (generator -> scalar) multiplicatively to a polynomial."""
    total = None
    for w, c in p.terms.items():
        val = one
        for sym in w:
            val = val * eps[sym]
            if val.is_zero():
                break
        piece = val * c
        total = piece if total is None else total + piece
    if total is None:
        return one - one
    return total


def tensor_apply_slot(m: GenMap, tp: TensorPoly, slot: int) -> TensorPoly:
    """Apply a generator map to one tensor slot, splicing in its arity."""
    out: dict = {}
    arity = None
    for ws, c in tp.terms.items():
        img = m.of_word(ws[slot])
        if isinstance(img, TensorPoly):
            pieces = img.terms.items()
            width = img.arity
        else:
            pieces = [((w,), cc) for w, cc in img.terms.items()]
            width = 1
        arity = tp.arity - 1 + width
        for pw, pc in pieces:
            key = ws[:slot] + pw + ws[slot + 1 :]
            coeff = pc * c
            if key in out:
                coeff = out[key] + coeff
            if coeff.is_zero():
                out.pop(key, None)
            else:
                out[key] = coeff
    if arity is None:
        arity = tp.arity + 1  # empty input: assume a coproduct-shaped map
    return TensorPoly(arity, out)


def tensor_counit_contract(eps: Mapping[str, object], tp: TensorPoly, slot: int, one):
    """Collapse one tensor slot through a counit; drops to NCPoly at arity 2."""
    out: dict = {}
    for ws, c in tp.terms.items():
        val = one
        for sym in ws[slot]:
            val = val * eps[sym]
            if val.is_zero():
                break
        coeff = val * c
        if coeff.is_zero():
            continue
        key = ws[:slot] + ws[slot + 1 :]
        if len(key) == 1:
            key = key[0]
        if key in out:
            coeff = out[key] + coeff
        if coeff.is_zero():
            out.pop(key, None)
        else:
            out[key] = coeff
    if tp.arity == 2:
        return NCPoly(out)
    return TensorPoly(tp.arity - 1, out)


def tensor_contract_multiply(tp: TensorPoly, maps, one) -> NCPoly:
    """Multiply slot images together, e.g. m(S (x) id) applied to a coproduct.

    ``maps`` has one entry per slot: a GenMap with NCPoly images, or None
    for the identity embedding.
    """
    total = NCPoly.zero()
    for ws, c in tp.terms.items():
        acc = NCPoly.word((), one)
        for slot, w in enumerate(ws):
            m = maps[slot]
            piece = NCPoly.word(w, one) if m is None else m.of_word(w)
            acc = acc * piece
        total = total + acc.scalar_mul(c)
    return total


@dataclass
class ConfluenceReport:
    """Outcome of exhaustive word-level confluence checking."""

    words_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def critical_pairs_check(
    rs: RewriteSystem, maxlen: int, extra_alphabet: Optional[Iterable[str]] = None
) -> ConfluenceReport:
    """Check that all one-step reducts of every short word join.

    Enumerates every word up to maxlen over the alphabet, reduces it once
    at every redex position, and requires all resulting normal forms to
    coincide; this covers every overlap of the two-letter rules up to the
    requested length.
    """
    if maxlen < 3:
        raise ValueError("overlap checking needs maxlen >= 3")
    from .scalar import ZSeries

    alphabet = tuple(extra_alphabet) if extra_alphabet else rs.alphabet
    report = ConfluenceReport()
    # coefficient order does not matter for joinability; keep it tiny
    sample = None
    for lhs, rhs in rs.rules.items():
        for c in rhs.terms.values():
            sample = c
            break
        if sample is not None:
            break
    one = _one_like(sample) if sample is not None else ZSeries.one(2)

    def words(length):
        if length == 0:
            yield ()
            return
        for w in words(length - 1):
            for sym in alphabet:
                yield w + (sym,)

    for length in range(2, maxlen + 1):
        for w in words(length):
            positions = [
                i for i in range(length - 1) if w[i : i + 2] in rs.rules
            ]
            if len(positions) < 2 and length > 2:
                continue
            if not positions:
                continue
            report.words_checked += 1
            forms = []
            for pos in positions:
                reduct = rs.reduce_once_at(w, one, pos)
                forms.append((pos, normal_form(reduct, rs)))
            base = forms[0][1]
            for pos, nf in forms[1:]:
                if nf != base:
                    report.failures.append(
                        {
                            "word": ".".join(w),
                            "positions": [forms[0][0], pos],
                        }
                    )
    return report
