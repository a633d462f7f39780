"""Exact linear algebra over rational coordinate rows.

Vectors over a basis are sparse dicts ``{basis_id: Fraction}`` with zero
entries stripped; dense rows are tuples of Fractions relative to an explicit
basis-id order.  Everything is exact, so membership and rank questions have
unambiguous answers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Vec = dict[str, Fraction]
Row = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# sparse vectors keyed by basis id
# ---------------------------------------------------------------------------

def vec_add(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, ZERO) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(c: Fraction, a: Vec) -> Vec:
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def vec_is_zero(a: Vec) -> bool:
    return not any(a.values())


def vec_strip(a: Vec) -> Vec:
    return {k: v for k, v in a.items() if v}


def to_row(vec: Mapping[str, Fraction], order: Sequence[str]) -> Row:
    return tuple(Fraction(vec.get(k, ZERO)) for k in order)


def from_row(row: Sequence[Fraction], order: Sequence[str]) -> Vec:
    return {k: Fraction(c) for k, c in zip(order, row) if c}


def fmt_vec(vec: Mapping[str, Fraction], order: Sequence[str]) -> str:
    """Render a vector as ``2*a - 1/3*b`` with ids in basis order; ``0`` if empty."""
    parts = []
    for k in order:
        c = vec.get(k, ZERO)
        if not c:
            continue
        if c == 1:
            term = k
        elif c == -1:
            term = f"-{k}"
        else:
            term = f"{c}*{k}"
        if parts and not term.startswith("-"):
            parts.append(f"+ {term}")
        elif parts:
            parts.append(f"- {term[1:]}")
        else:
            parts.append(term)
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# row reduction
# ---------------------------------------------------------------------------

def rref(rows: Iterable[Sequence[Fraction]]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = ONE / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [tuple(work[i]) for i in range(r)], pivots


def rank(rows: Iterable[Sequence[Fraction]]) -> int:
    return len(rref(rows)[0])


def reduce_against(row: Sequence[Fraction], basis: Sequence[Row], pivots: Sequence[int]) -> Row:
    """Residual of ``row`` after eliminating the pivots of an RREF basis."""
    work = list(row)
    for b, p in zip(basis, pivots):
        f = work[p]
        if f:
            work = [x - f * y for x, y in zip(work, b)]
    return tuple(work)


def in_span(row: Sequence[Fraction], basis: Sequence[Row], pivots: Sequence[int]) -> bool:
    return not any(reduce_against(row, basis, pivots))


def coords_in_rref(basis: Sequence[Row], pivots: Sequence[int], row: Sequence[Fraction]) -> list[Fraction] | None:
    """Coordinates of ``row`` over an RREF basis, or None when outside the span."""
    coeffs = [Fraction(row[p]) for p in pivots]
    work = list(row)
    for c, b in zip(coeffs, basis):
        if c:
            work = [x - c * y for x, y in zip(work, b)]
    if any(work):
        return None
    return coeffs


def extend_independent(basis_rows: Sequence[Row], candidates: Iterable[Sequence[Fraction]]) -> list[Row]:
    """First candidates (in given order) that grow the span; returned unreduced."""
    rows, pivots = rref(basis_rows)
    added: list[Row] = []
    for cand in candidates:
        resid = reduce_against(cand, rows, pivots)
        if any(resid):
            added.append(tuple(cand))
            rows, pivots = rref(list(rows) + [resid])
    return added


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Row]:
    """RREF basis of the solution set of ``rows @ x = 0`` in dimension ncols."""
    red, pivots = rref(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return rref(basis)[0]


def intersection_dim(rows_a: Sequence[Row], rows_b: Sequence[Row]) -> int:
    ra, rb = rank(rows_a), rank(rows_b)
    return ra + rb - rank(list(rows_a) + list(rows_b))
