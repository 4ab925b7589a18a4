"""Exact scalar arithmetic for the contraction engine.

Provides Gaussian rationals, the rank-2 dual-number (Study) algebra with
two commuting nilpotent units, exact truncated power series in the
deformation variable, and the structure constants (exp, cosh, sinh and
the division-free sinh(s*J*z)/J) realized as truncated series.  A second
series type keeps the contraction parameters j1, j2 symbolic as Laurent
exponents so that cancellations can be performed before nilpotent values
are substituted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Union


# ---------------------------------------------------------------------------
# Gaussian rationals


class GaussRational:
    """Exact complex number re + i*im with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussRational":
        v = object.__new__(cls)
        v.re = re
        v.im = im
        return v

    def __add__(self, other: "GaussRational") -> "GaussRational":
        return GaussRational._raw(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussRational") -> "GaussRational":
        return GaussRational._raw(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussRational":
        return GaussRational._raw(-self.re, -self.im)

    def __mul__(self, other: "GaussRational") -> "GaussRational":
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussRational._raw(a * c, Fraction(0))
        return GaussRational._raw(a * c - b * d, a * d + b * c)

    def inverse(self) -> "GaussRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return GaussRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other: "GaussRational") -> "GaussRational":
        return self * other.inverse()

    def __pow__(self, n: int) -> "GaussRational":
        if n < 0:
            return self.inverse() ** (-n)
        out = GR_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "GaussRational":
        return GaussRational._raw(self.re, -self.im)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GaussRational)
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        imp = "i" if abs(self.im) == 1 else f"{abs(self.im)}i"
        sign = "-" if self.im < 0 else "+"
        if not self.re:
            return f"{'-' if self.im < 0 else ''}{imp}"
        return f"{self.re}{sign}{imp}"


GR_ZERO = GaussRational(0)
GR_ONE = GaussRational(1)
GR_I = GaussRational(0, 1)
GR_HALF = GaussRational(Fraction(1, 2))


def gr(x) -> GaussRational:
    """Coerce an int/Fraction/GaussRational to GaussRational."""
    if isinstance(x, GaussRational):
        return x
    return GaussRational(x)


# ---------------------------------------------------------------------------
# Dual (Study) numbers with two nilpotent units


class DualCoeff:
    """Element c0 + c1*n1 + c2*n2 + c12*n1*n2 of the rank-2 dual algebra.

    The units satisfy n1*n1 = n2*n2 = 0 and n1*n2 = n2*n1 != 0, so any
    product whose degree in either unit exceeds 1 vanishes.
    """

    __slots__ = ("c0", "c1", "c2", "c12")

    def __init__(self, c0=0, c1=0, c2=0, c12=0):
        self.c0 = gr(c0)
        self.c1 = gr(c1)
        self.c2 = gr(c2)
        self.c12 = gr(c12)

    @classmethod
    def _raw(cls, c0, c1, c2, c12) -> "DualCoeff":
        v = object.__new__(cls)
        v.c0 = c0
        v.c1 = c1
        v.c2 = c2
        v.c12 = c12
        return v

    @classmethod
    def scalar(cls, x) -> "DualCoeff":
        return cls._raw(gr(x), GR_ZERO, GR_ZERO, GR_ZERO)

    def is_scalar(self) -> bool:
        return self.c1.is_zero() and self.c2.is_zero() and self.c12.is_zero()

    def is_zero(self) -> bool:
        return (
            self.c0.is_zero()
            and self.c1.is_zero()
            and self.c2.is_zero()
            and self.c12.is_zero()
        )

    def is_invertible(self) -> bool:
        return not self.c0.is_zero()

    def __add__(self, other: "DualCoeff") -> "DualCoeff":
        return DualCoeff._raw(
            self.c0 + other.c0,
            self.c1 + other.c1,
            self.c2 + other.c2,
            self.c12 + other.c12,
        )

    def __sub__(self, other: "DualCoeff") -> "DualCoeff":
        return DualCoeff._raw(
            self.c0 - other.c0,
            self.c1 - other.c1,
            self.c2 - other.c2,
            self.c12 - other.c12,
        )

    def __neg__(self) -> "DualCoeff":
        return DualCoeff._raw(-self.c0, -self.c1, -self.c2, -self.c12)

    def __mul__(self, other: "DualCoeff") -> "DualCoeff":
        a0, a1, a2, a12 = self.c0, self.c1, self.c2, self.c12
        b0, b1, b2, b12 = other.c0, other.c1, other.c2, other.c12
        if self.is_scalar():
            if a0.is_zero():
                return DC_ZERO
            return DualCoeff._raw(a0 * b0, a0 * b1, a0 * b2, a0 * b12)
        if other.is_scalar():
            if b0.is_zero():
                return DC_ZERO
            return DualCoeff._raw(a0 * b0, a1 * b0, a2 * b0, a12 * b0)
        return DualCoeff._raw(
            a0 * b0,
            a0 * b1 + a1 * b0,
            a0 * b2 + a2 * b0,
            a0 * b12 + a12 * b0 + a1 * b2 + a2 * b1,
        )

    def scale(self, x: GaussRational) -> "DualCoeff":
        if x.is_zero():
            return DC_ZERO
        return DualCoeff._raw(x * self.c0, x * self.c1, x * self.c2, x * self.c12)

    def __pow__(self, n: int) -> "DualCoeff":
        out = DC_ONE
        for _ in range(n):
            out = out * self
            if out.is_zero():
                return DC_ZERO
        return out

    def inverse(self) -> "DualCoeff":
        # (c0 + n)^-1 expanded to the nilpotency depth of n.
        if self.c0.is_zero():
            raise ZeroDivisionError("dual coefficient with zero scalar part")
        i0 = self.c0.inverse()
        i0sq = i0 * i0
        two = GaussRational(2)
        return DualCoeff._raw(
            i0,
            -self.c1 * i0sq,
            -self.c2 * i0sq,
            -self.c12 * i0sq + two * self.c1 * self.c2 * i0sq * i0,
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DualCoeff)
            and self.c0 == other.c0
            and self.c1 == other.c1
            and self.c2 == other.c2
            and self.c12 == other.c12
        )

    def __hash__(self):
        return hash((self.c0, self.c1, self.c2, self.c12))

    def __repr__(self):
        return f"DualCoeff({self.c0!s}, {self.c1!s}, {self.c2!s}, {self.c12!s})"

    def __str__(self):
        parts = []
        for comp, tag in (
            (self.c0, ""),
            (self.c1, "*n1"),
            (self.c2, "*n2"),
            (self.c12, "*n1n2"),
        ):
            if not comp.is_zero():
                parts.append(f"({comp}){tag}" if tag else str(comp))
        return " + ".join(parts) if parts else "0"


DC_ZERO = DualCoeff.scalar(0)
DC_ONE = DualCoeff.scalar(1)
DC_I = DualCoeff.scalar(GR_I)
NIL1 = DualCoeff(0, 1, 0, 0)
NIL2 = DualCoeff(0, 0, 1, 0)
NIL12 = DualCoeff(0, 0, 0, 1)


def dual_mul(a: DualCoeff, b: DualCoeff) -> DualCoeff:
    """Product in the rank-2 dual algebra."""
    return a * b


# ---------------------------------------------------------------------------
# Assignments of the contraction parameters


@dataclass(frozen=True)
class JAssign:
    """Concrete assignment of the two contraction parameters.

    Each parameter is either the unit 1 or the corresponding nilpotent
    dual unit; dual values turn the standard algebra into one of its
    nonsemisimple contractions.
    """

    j1_dual: bool
    j2_dual: bool

    @property
    def token(self) -> str:
        return ("i1" if self.j1_dual else "1") + "," + ("i2" if self.j2_dual else "1")

    @classmethod
    def parse(cls, token: str) -> "JAssign":
        parts = token.split(",")
        if len(parts) != 2 or parts[0] not in ("1", "i1") or parts[1] not in ("1", "i2"):
            raise ValueError(f"bad j assignment token: {token!r}")
        return cls(parts[0] == "i1", parts[1] == "i2")

    @property
    def j1(self) -> DualCoeff:
        return NIL1 if self.j1_dual else DC_ONE

    @property
    def j2(self) -> DualCoeff:
        return NIL2 if self.j2_dual else DC_ONE

    def eval_mono(self, e1: int, e2: int) -> DualCoeff:
        """Value of j1^e1 * j2^e2; negative powers of a dual unit are errors."""
        slot1 = slot2 = 0
        if self.j1_dual:
            if e1 < 0:
                raise ZeroDivisionError(f"negative power j1^{e1} at dual j1")
            if e1 >= 2:
                return DC_ZERO
            slot1 = e1
        if self.j2_dual:
            if e2 < 0:
                raise ZeroDivisionError(f"negative power j2^{e2} at dual j2")
            if e2 >= 2:
                return DC_ZERO
            slot2 = e2
        if slot1 and slot2:
            return NIL12
        if slot1:
            return NIL1
        if slot2:
            return NIL2
        return DC_ONE

    def __str__(self):
        return self.token


ALL_J = (
    JAssign(False, False),
    JAssign(True, False),
    JAssign(False, True),
    JAssign(True, True),
)


# ---------------------------------------------------------------------------
# Truncated power series over DualCoeff

ScalarLike = Union[int, Fraction, GaussRational, DualCoeff]


def _dc(x: ScalarLike) -> DualCoeff:
    if isinstance(x, DualCoeff):
        return x
    return DualCoeff.scalar(x)


class ZSeries:
    """Power series in the deformation variable truncated at a fixed order.

    Coefficients live in the dual algebra; all arithmetic is exact, and a
    product of polynomial inputs of total degree <= order is exact.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[DualCoeff] = ()):
        cs = list(coeffs)
        if len(cs) > order + 1:
            raise ValueError("more coefficients than the truncation order allows")
        cs.extend([DC_ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, order: int, coeffs: tuple) -> "ZSeries":
        v = object.__new__(cls)
        v.order = order
        v.coeffs = coeffs
        return v

    @classmethod
    def const(cls, x: ScalarLike, order: int) -> "ZSeries":
        return cls(order, [_dc(x)])

    @classmethod
    def zero(cls, order: int) -> "ZSeries":
        return cls._raw(order, (DC_ZERO,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "ZSeries":
        return cls.const(1, order)

    @classmethod
    def var(cls, order: int) -> "ZSeries":
        return cls.monomial(1, 1, order)

    @classmethod
    def monomial(cls, k: int, coeff: ScalarLike, order: int) -> "ZSeries":
        if k > order:
            return cls.zero(order)
        cs = [DC_ZERO] * (order + 1)
        cs[k] = _dc(coeff)
        return cls._raw(order, tuple(cs))

    def _check(self, other: "ZSeries"):
        if self.order != other.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        return ZSeries._raw(
            self.order,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        return ZSeries._raw(
            self.order,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "ZSeries":
        return ZSeries._raw(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        n = self.order
        out = [DC_ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return ZSeries._raw(n, tuple(out))

    def scalar_mul(self, x: ScalarLike) -> "ZSeries":
        c = _dc(x)
        if c.is_zero():
            return ZSeries.zero(self.order)
        return ZSeries._raw(self.order, tuple(a * c for a in self.coeffs))

    def __pow__(self, n: int) -> "ZSeries":
        out = ZSeries.one(self.order)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coeffs)

    def valuation(self):
        """Index of the first nonzero coefficient, or None for the zero series."""
        for k, a in enumerate(self.coeffs):
            if not a.is_zero():
                return k
        return None

    def constant(self) -> DualCoeff:
        return self.coeffs[0]

    def shift_down(self, k: int) -> "ZSeries":
        """Divide by z^k; the k lowest coefficients must vanish."""
        for a in self.coeffs[:k]:
            if not a.is_zero():
                raise ValueError("series not divisible by the requested power")
        cs = self.coeffs[k:] + (DC_ZERO,) * k
        return ZSeries._raw(self.order, cs)

    def inverse(self) -> "ZSeries":
        c0 = self.coeffs[0]
        if not c0.is_invertible():
            raise ZeroDivisionError("series with non-invertible constant term")
        i0 = c0.inverse()
        out = [i0] + [DC_ZERO] * self.order
        for k in range(1, self.order + 1):
            acc = DC_ZERO
            for m in range(1, k + 1):
                am = self.coeffs[m]
                if not am.is_zero():
                    acc = acc + am * out[k - m]
            out[k] = -(i0 * acc)
        return ZSeries._raw(self.order, tuple(out))

    def subst_scale(self, c: ScalarLike) -> "ZSeries":
        """Substitute z -> c*z, multiplying coefficient k by c^k."""
        cc = _dc(c)
        out = []
        p = DC_ONE
        for k, a in enumerate(self.coeffs):
            if k:
                p = p * cc
            out.append(a * p if not p.is_zero() else DC_ZERO)
        return ZSeries._raw(self.order, tuple(out))

    def restrict(self, order: int) -> "ZSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return ZSeries._raw(order, self.coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"ZSeries({self.order}, {list(self.coeffs)!r})"

    def __str__(self):
        parts = []
        for k, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            if k == 0:
                parts.append(f"{a}")
            elif k == 1:
                parts.append(f"({a})z")
            else:
                parts.append(f"({a})z^{k}")
        return " + ".join(parts) if parts else "0"


def series_arith(a: ZSeries, b, kind: str) -> ZSeries:
    """Ring operation on truncated series: add, sub, mul or scale."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "scale":
        if isinstance(b, ZSeries):
            if any(not c.is_zero() for c in b.coeffs[1:]):
                raise ValueError("scale expects a constant")
            return a.scalar_mul(b.constant())
        return a.scalar_mul(b)
    raise ValueError(f"unknown series operation: {kind!r}")


def structure_fn(kind: str, scale, jfactor: DualCoeff, order: int) -> ZSeries:
    """Structure-constant series exp/cosh/sinh(s*J*z) and sinh(s*J*z)/J.

    The sinhc kind carries J^(2k) on the z^(2k+1) coefficient, so it is
    defined without ever dividing by J; with nilpotent J the series is an
    exact polynomial.
    """
    if kind not in ("exp", "cosh", "sinh", "sinhc"):
        raise ValueError(f"unknown structure function: {kind!r}")
    s = gr(scale)
    parity = {"exp": None, "cosh": 0, "sinh": 1, "sinhc": 1}[kind]
    cs = [DC_ZERO] * (order + 1)
    spow = GR_ONE
    for k in range(order + 1):
        if k:
            spow = spow * s
        if parity is not None and k % 2 != parity:
            continue
        # sinhc divides one power of J out of sinh, term by term
        jexp = k - 1 if kind == "sinhc" else k
        jpow = jfactor ** jexp
        if jpow.is_zero():
            break
        cs[k] = jpow.scale(spow * GaussRational(Fraction(1, factorial(k))))
    return ZSeries(order, cs)


def series_sqrt_one_plus(s: ZSeries) -> ZSeries:
    """Square root of 1 + s via the binomial series; s must have no constant."""
    if not s.coeffs[0].is_zero():
        raise ValueError("sqrt helper expects a series with zero constant term")
    out = ZSeries.one(s.order)
    power = ZSeries.one(s.order)
    coeff = Fraction(1)
    for k in range(1, s.order + 1):
        coeff = coeff * (Fraction(1, 2) - (k - 1)) / k
        power = power * s
        if power.is_zero():
            break
        out = out + power.scalar_mul(GaussRational(coeff))
    return out


def series_subst_scale(a: ZSeries, c: ScalarLike) -> ZSeries:
    """Substitute z -> c*z in a truncated series."""
    return a.subst_scale(c)


# ---------------------------------------------------------------------------
# Series with symbolic Laurent monomials in (j1, j2)

Mono = tuple  # (e1, e2) exponent pair


class JSeries:
    """Truncated z-series whose coefficients are Laurent polynomials in j1, j2.

    Used where a computation must cancel powers of the contraction
    parameters before they are assigned nilpotent values: coefficients are
    maps (e1, e2) -> GaussRational and exponents may be negative.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        cs = [dict(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError("more coefficients than the truncation order allows")
        while len(cs) < order + 1:
            cs.append({})
        self.order = order
        self.coeffs = tuple(
            {m: g for m, g in c.items() if not g.is_zero()} for c in cs
        )

    @classmethod
    def _raw(cls, order, coeffs) -> "JSeries":
        v = object.__new__(cls)
        v.order = order
        v.coeffs = coeffs
        return v

    @classmethod
    def zero(cls, order: int) -> "JSeries":
        return cls._raw(order, tuple({} for _ in range(order + 1)))

    @classmethod
    def term(cls, k: int, coef, e1: int, e2: int, order: int) -> "JSeries":
        g = gr(coef)
        cs = [{} for _ in range(order + 1)]
        if k <= order and not g.is_zero():
            cs[k] = {(e1, e2): g}
        return cls._raw(order, tuple(cs))

    @classmethod
    def one(cls, order: int) -> "JSeries":
        return cls.term(0, 1, 0, 0, order)

    @classmethod
    def const_mono(cls, coef, e1: int, e2: int, order: int) -> "JSeries":
        return cls.term(0, coef, e1, e2, order)

    def _check(self, other: "JSeries"):
        if self.order != other.order:
            raise ValueError("truncation order mismatch")

    @staticmethod
    def _add_into(dst: dict, src: dict, sign: int = 1):
        for m, g in src.items():
            cur = dst.get(m)
            nv = (cur + g if sign > 0 else cur - g) if cur is not None else (
                g if sign > 0 else -g
            )
            if nv.is_zero():
                dst.pop(m, None)
            else:
                dst[m] = nv

    def __add__(self, other: "JSeries") -> "JSeries":
        self._check(other)
        out = []
        for a, b in zip(self.coeffs, other.coeffs):
            d = dict(a)
            JSeries._add_into(d, b)
            out.append(d)
        return JSeries._raw(self.order, tuple(out))

    def __sub__(self, other: "JSeries") -> "JSeries":
        self._check(other)
        out = []
        for a, b in zip(self.coeffs, other.coeffs):
            d = dict(a)
            JSeries._add_into(d, b, -1)
            out.append(d)
        return JSeries._raw(self.order, tuple(out))

    def __neg__(self) -> "JSeries":
        return JSeries._raw(
            self.order, tuple({m: -g for m, g in c.items()} for c in self.coeffs)
        )

    def __mul__(self, other: "JSeries") -> "JSeries":
        self._check(other)
        n = self.order
        out = [dict() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b:
                    continue
                dst = out[i + j]
                for (e1, e2), g in a.items():
                    for (f1, f2), h in b.items():
                        m = (e1 + f1, e2 + f2)
                        cur = dst.get(m)
                        nv = cur + g * h if cur is not None else g * h
                        if nv.is_zero():
                            dst.pop(m, None)
                        else:
                            dst[m] = nv
        return JSeries._raw(n, tuple(out))

    def scalar_mul(self, x) -> "JSeries":
        g = gr(x)
        if g.is_zero():
            return JSeries.zero(self.order)
        return JSeries._raw(
            self.order, tuple({m: g * v for m, v in c.items()} for c in self.coeffs)
        )

    def mul_mono(self, e1: int, e2: int, coef=1) -> "JSeries":
        g = gr(coef)
        if g.is_zero():
            return JSeries.zero(self.order)
        return JSeries._raw(
            self.order,
            tuple(
                {(m1 + e1, m2 + e2): g * v for (m1, m2), v in c.items()}
                for c in self.coeffs
            ),
        )

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def valuation(self):
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def subst_scale_mono(self, coef, e1: int, e2: int) -> "JSeries":
        """Substitute z -> coef * j1^e1 * j2^e2 * z."""
        g = gr(coef)
        out = []
        gp = GR_ONE
        for k, c in enumerate(self.coeffs):
            if k:
                gp = gp * g
            if gp.is_zero():
                out.append({})
                continue
            out.append(
                {(m1 + k * e1, m2 + k * e2): gp * v for (m1, m2), v in c.items()}
            )
        return JSeries._raw(self.order, tuple(out))

    def clear_min(self):
        """Factor out the largest monomial dividing every term.

        Returns (cleared, (e1, e2)) with cleared = self / (j1^e1 * j2^e2);
        the zero series clears to itself with exponent (0, 0).
        """
        monos = [m for c in self.coeffs for m in c]
        if not monos:
            return self, (0, 0)
        e1 = min(m[0] for m in monos)
        e2 = min(m[1] for m in monos)
        return self.mul_mono(-e1, -e2), (e1, e2)

    def inverse(self) -> "JSeries":
        """Inverse when the constant coefficient is a single monomial."""
        c0 = self.coeffs[0]
        if len(c0) != 1:
            raise ZeroDivisionError(
                "constant coefficient is not a single invertible monomial"
            )
        ((e1, e2), g), = c0.items()
        unit = JSeries.const_mono(g.inverse(), -e1, -e2, self.order)
        rest = self * unit - JSeries.one(self.order)  # valuation >= 1
        out = JSeries.one(self.order)
        power = JSeries.one(self.order)
        sign = 1
        for _ in range(1, self.order + 1):
            power = power * rest
            if power.is_zero():
                break
            sign = -sign
            out = out + power.scalar_mul(GaussRational(sign))
        return out * unit

    def specialize(self, j: JAssign, order=None) -> ZSeries:
        """Evaluate the Laurent coefficients at a concrete j assignment."""
        n = self.order if order is None else order
        cs = []
        for k in range(n + 1):
            acc = DC_ZERO
            if k <= self.order:
                for (e1, e2), g in self.coeffs[k].items():
                    val = j.eval_mono(e1, e2)
                    if not val.is_zero():
                        acc = acc + val.scale(g)
            cs.append(acc)
        return ZSeries(n, cs)

    def restrict(self, order: int) -> "JSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return JSeries._raw(order, self.coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, JSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"JSeries({self.order}, {[dict(c) for c in self.coeffs]!r})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            for (e1, e2), g in sorted(c.items()):
                mono = []
                if e1:
                    mono.append(f"j1^{e1}")
                if e2:
                    mono.append(f"j2^{e2}")
                mono.append(f"z^{k}" if k else "")
                body = "*".join(x for x in mono if x)
                parts.append(f"({g}){'*' + body if body else ''}")
        return " + ".join(parts) if parts else "0"


def jseries_structure_fn(kind: str, scale, e1: int, e2: int, order: int) -> JSeries:
    """Generic structure-constant series with J = j1^e1 * j2^e2 kept symbolic."""
    s = gr(scale)
    cs = [{} for _ in range(order + 1)]
    spow = GR_ONE
    for k in range(order + 1):
        if k:
            spow = spow * s
        val = spow * GaussRational(Fraction(1, factorial(k)))
        if kind == "exp":
            cs[k] = {(k * e1, k * e2): val}
        elif kind == "cosh":
            if k % 2 == 0:
                cs[k] = {(k * e1, k * e2): val}
        elif kind == "sinh":
            if k % 2 == 1:
                cs[k] = {(k * e1, k * e2): val}
        elif kind == "sinhc":
            if k % 2 == 1:
                cs[k] = {((k - 1) * e1, (k - 1) * e2): val}
        else:
            raise ValueError(f"unknown structure function: {kind!r}")
    return JSeries(order, cs)
