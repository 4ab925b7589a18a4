"""Small matrix helpers over arbitrary rings.

Entries only need +, -, * and is_zero(); both series and noncommutative
polynomials qualify.  Matrices are plain lists of lists.
"""

from __future__ import annotations

from typing import Callable, List


def mat_mul(a: List[list], b: List[list], zero: Callable[[], object]) -> List[list]:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = zero()
            for t in range(k):
                x, y = a[i][t], b[t][j]
                if x.is_zero() or y.is_zero():
                    continue
                acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def mat_sub(a: List[list], b: List[list]) -> List[list]:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_apply(a: List[list], f: Callable) -> List[list]:
    return [[f(x) for x in row] for row in a]


def mat_is_zero(a: List[list]) -> bool:
    return all(x.is_zero() for row in a for x in row)


def mat_det(a: List[list], zero: Callable[[], object]) -> object:
    """Leibniz determinant; fine for the 2x2 and 4x4 sizes used here."""
    from itertools import permutations

    n = len(a)
    acc = zero()
    for perm in permutations(range(n)):
        inv = sum(
            1 for i in range(n) for k in range(i + 1, n) if perm[i] > perm[k]
        )
        prod = None
        for i, p in enumerate(perm):
            e = a[i][p]
            if e.is_zero():
                prod = None
                break
            prod = e if prod is None else prod * e
        if prod is None:
            continue
        acc = acc + (prod if inv % 2 == 0 else -prod)
    return acc


def kron_slot_pair(r: List[list], slots: tuple, zero: Callable[[], object]) -> List[list]:
    """Embed a 4x4 two-site matrix into the 8x8 three-site space.

    ``slots`` names the two tensor legs (0-based) the matrix acts on; the
    remaining leg carries the identity.  Row/column index bits are
    (i0, i1, i2) with i0 the most significant.
    """
    s0, s1 = slots
    rest = ({0, 1, 2} - {s0, s1}).pop()
    out = [[zero() for _ in range(8)] for _ in range(8)]
    for row in range(8):
        rb = ((row >> 2) & 1, (row >> 1) & 1, row & 1)
        for col in range(8):
            cb = ((col >> 2) & 1, (col >> 1) & 1, col & 1)
            if rb[rest] != cb[rest]:
                continue
            entry = r[2 * rb[s0] + rb[s1]][2 * cb[s0] + cb[s1]]
            if not entry.is_zero():
                out[row][col] = entry
    return out
