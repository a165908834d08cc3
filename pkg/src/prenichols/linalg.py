"""Sparse exact echelon forms over cyclotomic fields.

Rows are dicts mapping a hashable, totally ordered column key to a nonzero
Cyc.  The pivot of a row is its largest key, so for word columns ordered by
deglex the pivot is the leading word.
"""
from __future__ import annotations

from typing import Callable, Hashable, Iterable

from .scalar import Cyc

Row = dict


def axpy(target: Row, c: Cyc, row: Row) -> None:
    """target += c * row, in place, dropping zeros."""
    for k, v in row.items():
        prev = target.get(k)
        if prev is None:
            target[k] = c * v
        else:
            s = prev + c * v
            if s:
                target[k] = s
            else:
                del target[k]


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Each stored row is monic at its pivot and contains no other pivot column.
    """

    def __init__(self, key: Callable = None):
        self.key = key
        self.rows: dict[Hashable, Row] = {}
        # column -> set of pivots whose row mentions that (non-pivot) column
        self._users: dict[Hashable, set] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def _pivot(self, row: Row):
        return max(row, key=self.key) if self.key else max(row)

    def reduce(self, row: Row) -> Row:
        row = dict(row)
        hits = [k for k in row if k in self.rows]
        while hits:
            for k in hits:
                c = row.get(k)
                if c is not None:
                    axpy(row, -c, self.rows[k])
            hits = [k for k in row if k in self.rows]
        return row

    def insert(self, row: Row):
        """Add a row; returns its pivot, or None if it was dependent."""
        row = self.reduce(row)
        if not row:
            return None
        p = self._pivot(row)
        inv = row[p].inverse()
        if inv != 1:
            row = {k: v * inv for k, v in row.items()}
        for other_p in list(self._users.pop(p, ())):
            other = self.rows.get(other_p)
            if other is None or p not in other:
                continue
            axpy(other, -other[p], row)
            for k in row:
                if k != other_p and k in other:
                    self._users.setdefault(k, set()).add(other_p)
        self.rows[p] = row
        for k in row:
            if k != p:
                self._users.setdefault(k, set()).add(p)
        return p

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)


def rank(rows: Iterable[Row], key: Callable = None) -> int:
    e = Echelon(key)
    for r in rows:
        e.insert(r)
    return len(e)
