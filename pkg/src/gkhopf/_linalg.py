"""Sparse exact linear algebra over the cyclotomic scalars.

Rows are dicts mapping a column key to a nonzero Cyclo.  Systems in this
package are small (at most a few hundred columns), so plain reduced row
echelon form is enough.
"""

from __future__ import annotations

from typing import Hashable, Iterable

from .scalars import Cyclo


def _subtract(row: dict, factor: Cyclo, other: dict) -> None:
    for col, val in other.items():
        new = row.get(col, Cyclo.zero()) - factor * val
        if new.is_zero():
            row.pop(col, None)
        else:
            row[col] = new


def rref(rows: Iterable[dict]) -> dict[Hashable, dict]:
    """Reduced row echelon form; returns {pivot column: normalized row}."""
    pivots: dict[Hashable, dict] = {}
    for row in rows:
        row = dict(row)
        while True:
            hit = next((c for c in row if c in pivots), None)
            if hit is None:
                break
            _subtract(row, row[hit], pivots[hit])
        if not row:
            continue
        piv = min(row, key=_col_key)
        inv = row[piv].inv()
        row = {c: v * inv for c, v in row.items()}
        for prow in pivots.values():
            if piv in prow:
                _subtract(prow, prow[piv], row)
        pivots[piv] = row
    return pivots


def _col_key(col):
    return (repr(type(col)), repr(col))


def rank(rows: Iterable[dict]) -> int:
    return len(rref(rows))


def nullspace(rows: Iterable[dict], columns: list) -> list[dict]:
    """Basis of the solution space of ``rows * x = 0`` over ``columns``."""
    pivots = rref(rows)
    free = [c for c in columns if c not in pivots]
    basis = []
    for f in free:
        vec = {f: Cyclo.one()}
        for piv, row in pivots.items():
            coef = row.get(f)
            if coef is not None and not coef.is_zero():
                vec[piv] = -coef
        basis.append(vec)
    return basis
