"""Sparse exact linear algebra over Q or GF(p).

Vectors are dicts ``{index: nonzero scalar}``; a linear map is stored by its
columns, i.e. the images of the standard basis vectors.  Everything stays in
reduced row-echelon form so a single pass eliminates all pivots.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = dict


def _inverse(c):
    # bare ints would fall through to float division
    return Fraction(1, c) if isinstance(c, int) else c ** -1


def axpy(y: Vector, a, x: Vector) -> None:
    """In place ``y += a * x``."""
    for i, c in x.items():
        v = y.get(i)
        v = a * c if v is None else v + a * c
        if v:
            y[i] = v
        else:
            y.pop(i, None)


def scale(x: Vector, a) -> Vector:
    return {i: a * c for i, c in x.items()} if a else {}


class Echelon:
    """Reduced echelon basis of a growing subspace.

    ``add`` returns True when the vector was independent of everything added
    before.  With ``track=True`` each row remembers which input combination
    produced it; vectors that reduce to zero then yield kernel relations.
    """

    def __init__(self, track: bool = False):
        self.rows: dict[int, Vector] = {}
        self.combos: dict[int, Vector] = {}
        self.track = track
        self.count = 0

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Vector, combo: Vector | None = None) -> Vector:
        v = dict(v)
        for p in [p for p in v if p in self.rows]:
            c = v.get(p)
            if c:
                axpy(v, -c, self.rows[p])
                if combo is not None:
                    axpy(combo, -c, self.combos[p])
        return v

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def add(self, v: Vector, combo: Vector | None = None):
        """Insert ``v``; returns True if independent.

        When tracking and ``v`` is dependent, returns the relation (a combo
        vector) instead of False.
        """
        self.count += 1
        if self.track and combo is None:
            raise ValueError("tracking echelon needs a combo for each vector")
        combo = dict(combo) if combo is not None else None
        r = self.reduce(v, combo)
        if not r:
            return combo if self.track else False
        p = min(r)
        inv = _inverse(r[p])
        r = scale(r, inv)
        if combo is not None:
            combo = scale(combo, inv)
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                axpy(row, -c, r)
                if combo is not None:
                    axpy(self.combos[q], -c, combo)
        self.rows[p] = r
        if combo is not None:
            self.combos[p] = combo
        return True

    def basis(self) -> list[Vector]:
        return [self.rows[p] for p in sorted(self.rows)]


def rank(vectors: Iterable[Vector]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def span_basis(vectors: Iterable[Vector]) -> list[Vector]:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.basis()


class LinearMap:
    """Square or rectangular map stored column by column."""

    def __init__(self, columns: Sequence[Vector], nrows: int | None = None, one=Fraction(1)):
        self.one = one
        self.columns = [dict(c) for c in columns]
        self.ncols = len(self.columns)
        self.nrows = self.ncols if nrows is None else nrows

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        for j, c in v.items():
            axpy(out, c, self.columns[j])
        return out

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self ∘ other``."""
        return LinearMap([self.apply(c) for c in other.columns], self.nrows, self.one)

    def power_columns(self, k: int) -> list[Vector]:
        cols = [{j: self.one} for j in range(self.ncols)]
        for _ in range(k):
            cols = [self.apply(c) for c in cols]
        return cols

    def rank(self) -> int:
        return rank(self.columns)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def kernel(self) -> list[Vector]:
        return kernel(self.columns, self.one)

    def to_dense(self, zero=0) -> list[list]:
        M = [[zero] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                M[i][j] = c
        return M

    def power_ranks(self) -> list[int]:
        """``[rank(L^0), rank(L^1), ...]`` up to the first zero (nilpotent maps)."""
        ranks = [self.ncols]
        current = span_basis({j: self.one} for j in range(self.ncols))
        while current:
            current = span_basis(self.apply(v) for v in current)
            ranks.append(len(current))
            if len(ranks) > self.ncols + 2:
                raise ValueError("map is not nilpotent")
        return ranks


def kernel(columns: Sequence[Vector], one=Fraction(1)) -> list[Vector]:
    """Basis of the null space, one relation per dependent column in order."""
    ech = Echelon(track=True)
    out = []
    for j, col in enumerate(columns):
        res = ech.add(col, {j: one})
        if res is not True:
            out.append(res)
    return out
