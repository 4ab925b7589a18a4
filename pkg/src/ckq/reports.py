"""Structured results for verification runs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional


@dataclass
class CheckItem:
    """A single verified identity inside a check."""

    name: str
    ok: bool
    note: str = ""
    nonzero_count: int = 0
    first_nonzero_order: Optional[int] = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "ok": self.ok}
        if self.note:
            d["note"] = self.note
        if self.nonzero_count:
            d["nonzero_count"] = self.nonzero_count
        if self.first_nonzero_order is not None:
            d["first_nonzero_order"] = self.first_nonzero_order
        return d


@dataclass
class CheckReport:
    """Outcome of one check on one (family, variant, j) case."""

    check: str
    family: str
    variant: str
    j: str
    order: int
    mode: str = ""
    maxlen: Optional[int] = None
    items: List[CheckItem] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)  # metadata; does not affect status
    wall_time_s: Optional[float] = None

    def add(self, name: str, ok: bool, note: str = "", nonzero_count: int = 0,
            first_nonzero_order: Optional[int] = None):
        self.items.append(
            CheckItem(name, ok, note, nonzero_count, first_nonzero_order)
        )

    @property
    def ok(self) -> bool:
        return all(it.ok for it in self.items)

    @property
    def status(self) -> str:
        if not self.ok:
            return "fail"
        if any(it.note for it in self.items) or self.notes:
            return "pass-with-note"
        return "pass"

    def residual_summary(self) -> dict:
        orders = [
            it.first_nonzero_order
            for it in self.items
            if it.first_nonzero_order is not None
        ]
        return {
            "nonzero_count": sum(it.nonzero_count for it in self.items),
            "first_nonzero_order": min(orders) if orders else None,
        }

    def to_dict(self) -> dict:
        d = {
            "check": self.check,
            "family": self.family,
            "variant": self.variant,
            "j": self.j,
            "N": self.order,
            "status": self.status,
            "residuals": self.residual_summary(),
            "items": [it.to_dict() for it in self.items],
            "notes": list(self.notes),
        }
        if self.info:
            d["info"] = dict(self.info)
        if self.mode:
            d["mode"] = self.mode
        if self.maxlen is not None:
            d["maxlen"] = self.maxlen
        if self.wall_time_s is not None:
            d["wall_time_s"] = self.wall_time_s
        return d


def residual_item(report: CheckReport, name: str, residual, note: str = ""):
    """Record a residual that is expected to vanish.

    The residual may be a series, a polynomial, a tensor polynomial, or a
    list/matrix of such; ok means everything is exactly zero.
    """
    nonzero = 0
    first_order = None

    def visit(x):
        nonlocal nonzero, first_order
        if x is None:
            return
        if isinstance(x, (list, tuple)):
            for y in x:
                visit(y)
            return
        if x.is_zero():
            return
        nonzero += 1
        val = _valuation_of(x)
        if val is not None and (first_order is None or val < first_order):
            first_order = val

    visit(residual)
    report.add(name, nonzero == 0, note, nonzero, first_order)


def _valuation_of(x):
    if hasattr(x, "valuation"):
        return x.valuation()
    if hasattr(x, "terms"):
        vals = [
            c.valuation() for c in x.terms.values() if c.valuation() is not None
        ]
        return min(vals) if vals else None
    return None
