"""Partitions, Hilbert-function sequences and the combinatorics relating them.

Jordan types of nilpotent operators and Hilbert functions of graded algebras
are both recorded as partitions of the vector-space dimension; most questions
about Lefschetz properties reduce to comparing such partitions in the
dominance order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, NamedTuple

from .errors import MismatchedWeight, ParseError

__all__ = [
    "Partition",
    "HilbertFunction",
    "Dominance",
    "Unimodality",
    "conjugate",
    "dominates",
    "leq",
    "clebsch_gordan",
    "tensor_jordan_type",
    "hilbert_tensor",
    "is_unimodal",
    "is_symmetric",
    "partitions_of",
]


@dataclass(frozen=True, order=False)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from any multiset of non-negative integers; zeros are dropped."""
        return cls(tuple(sorted((int(p) for p in parts if p), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        try:
            return cls(tuple(int(t) for t in text.split(",")))
        except ValueError as exc:
            raise ParseError(f"bad partition {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __str__(self):
        return ",".join(map(str, self.parts))

    def __repr__(self):
        return f"Partition({self.parts})"


def _as_partition(p) -> Partition:
    if isinstance(p, Partition):
        return p
    return Partition(tuple(p))


def conjugate(P) -> Partition:
    """Transpose of the Ferrers diagram: part i counts parts of P that are >= i."""
    P = _as_partition(P)
    if not P.parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in P.parts if p >= i) for i in range(1, P.parts[0] + 1)))


class Dominance(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def dominates(P, Q) -> Dominance:
    """Compare two partitions of the same integer by their prefix sums.

    Returns how ``P`` relates to ``Q``: ``LESS`` means ``P < Q``.
    """
    P, Q = _as_partition(P), _as_partition(Q)
    if P.n != Q.n:
        raise MismatchedWeight(f"cannot compare partitions of {P.n} and {Q.n}")
    length = max(len(P), len(Q))
    sp = list(accumulate(P.parts + (0,) * (length - len(P))))
    sq = list(accumulate(Q.parts + (0,) * (length - len(Q))))
    le = all(a <= b for a, b in zip(sp, sq))
    ge = all(a >= b for a, b in zip(sp, sq))
    if le and ge:
        return Dominance.EQUAL
    if le:
        return Dominance.LESS
    if ge:
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def leq(P, Q) -> bool:
    """``P <= Q`` in the dominance order."""
    return dominates(P, Q) in (Dominance.LESS, Dominance.EQUAL)


def clebsch_gordan(m: int, n: int) -> Partition:
    """Jordan type of x+y on k[x,y]/(x^m, y^n): (m+n-1, m+n-3, ..., |m-n|+1)."""
    if m < 1 or n < 1:
        raise ValueError("block sizes must be positive")
    return Partition(tuple(m + n + 1 - 2 * k for k in range(1, min(m, n) + 1)))


def tensor_jordan_type(P, Q) -> Partition:
    """Jordan type of l_A + l_B on A (x) B given the Jordan types of l_A and l_B."""
    P, Q = _as_partition(P), _as_partition(Q)
    parts = []
    for p in P.parts:
        for q in Q.parts:
            parts.extend(clebsch_gordan(p, q).parts)
    return Partition.from_parts(parts)


@dataclass(frozen=True)
class HilbertFunction:
    """Dimensions of graded pieces, indexed by degree starting at 0.

    Internal zeros are kept: non-standard weights produce them.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if any(v < 0 for v in values):
            raise ValueError(f"Hilbert function values must be non-negative: {values}")
        while values and values[-1] == 0:
            values = values[:-1]
        object.__setattr__(self, "values", values)

    @classmethod
    def parse(cls, text: str) -> "HilbertFunction":
        text = text.strip().strip("()[]")
        try:
            return cls(tuple(int(t) for t in text.split(",") if t.strip()))
        except ValueError as exc:
            raise ParseError(f"bad Hilbert function {text!r}: {exc}") from None

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    @property
    def total(self) -> int:
        return sum(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def get(self, i: int) -> int:
        return self.values[i] if 0 <= i < len(self.values) else 0

    def as_partition(self) -> Partition:
        return Partition.from_parts(self.values)

    def conjugate(self) -> Partition:
        return conjugate(self.as_partition())

    def __str__(self):
        return "[" + ",".join(map(str, self.values)) + "]"


def _as_hilbert(H) -> HilbertFunction:
    return H if isinstance(H, HilbertFunction) else HilbertFunction(tuple(H))


def hilbert_tensor(H, H2) -> HilbertFunction:
    """Coefficients of the product of the two generating polynomials."""
    a, b = _as_hilbert(H).values, _as_hilbert(H2).values
    if not a or not b:
        return HilbertFunction(())
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return HilbertFunction(tuple(out))


class Unimodality(NamedTuple):
    ok: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self):
        return self.ok


def is_unimodal(H) -> Unimodality:
    """Weakly increasing then weakly decreasing.

    On failure the witness ``(a, b, c)`` has ``a < b < c`` and
    ``h_a > h_b < h_c``: ``a`` starts the first strict descent and ``c``
    ends the first strict ascent after it.
    """
    h = _as_hilbert(H).values
    descent = None
    for i in range(len(h) - 1):
        if descent is None:
            if h[i] > h[i + 1]:
                descent = i
        elif h[i] < h[i + 1]:
            return Unimodality(False, (descent, i, i + 1))
    return Unimodality(True, None)


def is_symmetric(H) -> bool:
    h = _as_hilbert(H).values
    return h == h[::-1]


def partitions_of(n: int, max_part: int | None = None):
    """Yield every partition of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)
