"""Sparse exact linear algebra over a field of coefficients.

Vectors are dicts ``{key: coeff}`` with no zero entries.  Elimination is
Gauss-Jordan with a prescribed column order; within a column the pivot
row is the candidate whose entry has the smallest size (polynomial degree
for Q(mu), bit length for Q), which keeps intermediate expressions small.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .scalars import size_of

Vec = dict


def add_to(vec: dict, key, c) -> None:
    """In-place ``vec[key] += c`` dropping zeros."""
    if not c:
        return
    old = vec.get(key)
    if old is None:
        vec[key] = c
        return
    s = old + c
    if s:
        vec[key] = s
    else:
        del vec[key]


def axpy(vec: dict, c, other: dict) -> None:
    """In-place ``vec += c * other``."""
    if not c:
        return
    for k, v in other.items():
        add_to(vec, k, c * v)


def scale(vec: dict, c) -> dict:
    if not c:
        return {}
    return {k: c * v for k, v in vec.items()}


def combine(*pairs) -> dict:
    """``sum(c * v for c, v in pairs)``."""
    out: dict = {}
    for c, v in pairs:
        axpy(out, c, v)
    return out


def rref(rows: Iterable[dict], order: Sequence[Hashable]) -> list[tuple[Hashable, dict]]:
    """Reduced row echelon form.

    ``order`` lists every column key; earlier keys are pivoted first.
    Returns ``(pivot_key, row)`` pairs with ``row[pivot_key] == 1`` and
    every other pivot column cleared, in column order.
    """
    pending = [dict(r) for r in rows if r]
    done: list[tuple[Hashable, dict]] = []
    for col in order:
        cands = [i for i, r in enumerate(pending) if col in r]
        if not cands:
            continue
        best = min(cands, key=lambda i: (size_of(pending[i][col]), len(pending[i])))
        piv = pending.pop(best)
        inv = _inv(piv[col])
        piv = {k: v * inv for k, v in piv.items()}
        piv[col] = 1
        for r in pending:
            c = r.get(col)
            if c:
                axpy(r, -c, piv)
        pending = [r for r in pending if r]
        for _, r in done:
            c = r.get(col)
            if c:
                axpy(r, -c, piv)
        done.append((col, piv))
    return done


def _inv(c):
    return Fraction(1, c) if isinstance(c, int) else 1 / c


class EchelonBasis:
    """Incrementally maintained reduced echelon basis of a subspace.

    Column order is given by ``rank_of(key)``; smaller ranks pivot first.
    """

    def __init__(self, rank_of=None):
        self.rank_of = rank_of or (lambda k: k)
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        out = dict(vec)
        for p, row in self.rows.items():
            c = out.get(p)
            if c:
                axpy(out, -c, row)
        return out

    def add(self, vec: dict) -> bool:
        """Add ``vec``; return True if it enlarged the span."""
        r = self.reduce(vec)
        if not r:
            return False
        p = min(r, key=self.rank_of)
        inv = _inv(r[p])
        r = {k: v * inv for k, v in r.items()}
        r[p] = 1
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                axpy(row, -c, r)
        self.rows[p] = r
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def rank(vectors: Iterable[dict], rank_of=None) -> int:
    eb = EchelonBasis(rank_of)
    for v in vectors:
        eb.add(v)
    return len(eb)


def nullspace(columns: dict, col_order: Sequence[Hashable]) -> tuple[list, dict]:
    """Kernel of the matrix whose column ``f`` is the vector ``columns[f]``.

    Returns ``(pivots, reduction)`` where ``pivots`` are the pivot columns in
    order and ``reduction[f]`` expresses column ``f`` modulo the kernel as a
    combination of pivot columns.  The kernel is spanned by
    ``e_f - sum(reduction[f][p] e_p)`` over the free columns ``f``.
    """
    rows: dict = {}
    for f in col_order:
        for r, c in columns.get(f, {}).items():
            rows.setdefault(r, {})[f] = c
    ech = rref(rows.values(), col_order)
    pivots = [p for p, _ in ech]
    pset = set(pivots)
    reduction = {}
    for f in col_order:
        if f in pset:
            reduction[f] = {f: 1}
        else:
            reduction[f] = {p: row[f] for p, row in ech if f in row}
    return pivots, reduction


def kernel_vectors(pivots, reduction, col_order) -> list[dict]:
    pset = set(pivots)
    out = []
    for f in col_order:
        if f in pset:
            continue
        v = {f: 1}
        for p, c in reduction[f].items():
            add_to(v, p, -c)
        out.append(v)
    return out
