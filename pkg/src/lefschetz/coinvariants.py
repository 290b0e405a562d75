"""Coinvariant and relative coinvariant rings of the groups G(m,p,n).

Supported subgroup chains K ⊂ W:

* ``amn``  : S_n ⊂ G(m,1,n), giving A(m,n) = k[e_1..e_n]/(ê_1..ê_n)
* ``ampn`` : G(p,p,n) ⊂ G(m,p,n), giving A(m,p,n)
* ``gmmn`` : G(m,m,n-1) ⊂ G(m,m,n), a two-variable complete intersection
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import factorial

from .algebra import ArtinianAlgebra
from .errors import ParseError, PreconditionViolated, ResourceCapExceeded, UnsupportedPair
from .extensions import ExtensionSpec
from .fields import QQ, FieldSpec
from .partitions import HilbertFunction, Partition, is_unimodal
from .polynomials import Polynomial, WeightedRing
from .symmetric import e_ring, esym, hat_in_elementary, x_ring

DEFAULT_CAP = 5000


@dataclass(frozen=True)
class GroupSpec:
    """The reflection group G(m,p,n)."""

    m: int
    p: int
    n: int

    def __post_init__(self):
        if min(self.m, self.p, self.n) < 1:
            raise PreconditionViolated(f"G({self.m},{self.p},{self.n}): parameters must be positive")
        if self.m % self.p:
            raise PreconditionViolated(f"G({self.m},{self.p},{self.n}): p must divide m")

    @property
    def order(self) -> int:
        return self.m ** self.n * factorial(self.n) // self.p

    @property
    def degrees(self) -> tuple[int, ...]:
        """Degrees of the basic invariants."""
        return tuple(i * self.m for i in range(1, self.n)) + (self.n * self.m // self.p,)

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        try:
            m, p, n = (int(t) for t in text.split(","))
        except ValueError:
            raise ParseError(f"expected m,p,n but got {text!r}") from None
        return cls(m, p, n)

    def __str__(self):
        return f"G({self.m},{self.p},{self.n})"


TAGS = ("amn", "ampn", "gmmn")


@dataclass(frozen=True)
class RelativePair:
    tag: str
    m: int
    n: int
    p: int = 1

    def __post_init__(self):
        if self.tag not in TAGS:
            raise UnsupportedPair(f"unknown pair type {self.tag!r}; expected one of {', '.join(TAGS)}")
        if min(self.m, self.n, self.p) < 1:
            raise UnsupportedPair("parameters must be positive")
        if self.tag == "amn" and self.p != 1:
            raise UnsupportedPair("amn pairs have p = 1")
        if self.tag == "ampn" and self.m % self.p:
            raise UnsupportedPair(f"p={self.p} does not divide m={self.m}")
        if self.tag == "gmmn" and self.n < 2:
            raise UnsupportedPair("gmmn needs n >= 2")

    @property
    def W(self) -> GroupSpec:
        if self.tag == "amn":
            return GroupSpec(self.m, 1, self.n)
        if self.tag == "ampn":
            return GroupSpec(self.m, self.p, self.n)
        return GroupSpec(self.m, self.m, self.n)

    @property
    def K(self) -> GroupSpec:
        if self.tag == "amn":
            return GroupSpec(1, 1, self.n)
        if self.tag == "ampn":
            return GroupSpec(self.p, self.p, self.n)
        return GroupSpec(self.m, self.m, self.n - 1)

    @property
    def expected_dim(self) -> int:
        return self.W.order // self.K.order

    @property
    def label(self) -> str:
        if self.tag == "amn":
            return f"A({self.m},{self.n})"
        if self.tag == "ampn":
            return f"A({self.m},{self.p},{self.n})"
        return f"R^{self.K}_{self.W}"

    @classmethod
    def parse(cls, text: str) -> "RelativePair":
        m = re.fullmatch(r"\s*(amn|ampn|gmmn)\s*:\s*([\d,\s]+)", text.lower())
        if not m:
            raise ParseError(f"expected amn:m,n | ampn:m,p,n | gmmn:m,n but got {text!r}")
        tag = m.group(1)
        nums = [int(t) for t in m.group(2).split(",") if t.strip()]
        want = 3 if tag == "ampn" else 2
        if len(nums) != want:
            raise ParseError(f"{tag} takes {want} integers, got {len(nums)}")
        if tag == "ampn":
            return cls(tag, nums[0], nums[2], nums[1])
        return cls(tag, nums[0], nums[1])

    def __str__(self):
        if self.tag == "ampn":
            return f"ampn:{self.m},{self.p},{self.n}"
        return f"{self.tag}:{self.m},{self.n}"


def _guard(dim: int, cap: int | None, what: str):
    if cap is not None and dim > cap:
        raise ResourceCapExceeded(f"{what} has dimension {dim}, above the cap {cap}", dim, cap)


def coinvariant_generators(G: GroupSpec, ring: WeightedRing) -> list[Polynomial]:
    n = G.n
    gens = [esym(ring, range(n), i, G.m) for i in range(1, n)]
    gens.append(esym(ring, range(n), n, G.m // G.p))
    return gens


def coinvariant_ring(G: GroupSpec, cap: int | None = DEFAULT_CAP, field: FieldSpec = QQ) -> ArtinianAlgebra:
    """``k[x_1..x_n]/(ê_1, ..., ê_{n-1}, (x_1⋯x_n)^{m/p})`` with ê at power m."""
    _guard(G.order, cap, str(G))
    ring = x_ring(G.n, field)
    A = ArtinianAlgebra(ring, coinvariant_generators(G, ring), name=f"R_{G}")
    assert A.dim == G.order, (A.dim, G.order)
    return A


def _ampn_ring(pair: RelativePair, field: FieldSpec) -> WeightedRing:
    n, p = pair.n, pair.p
    names = tuple(f"f{i}" for i in range(1, n)) + ("g",)
    weights = tuple(p * i for i in range(1, n)) + (n,)
    return WeightedRing(names, weights, field)


def relative_presentation(pair: RelativePair, field: FieldSpec = QQ) -> tuple[WeightedRing, list[Polynomial]]:
    m, n, p = pair.m, pair.n, pair.p
    if pair.tag == "amn":
        ring = e_ring(n, field)
        return ring, [hat_in_elementary(i, n, m, ring) for i in range(1, n + 1)]
    if pair.tag == "gmmn":
        ring = WeightedRing(("a", "b"), (n - 1, 1), field)
        a, b = ring.gens()
        # ê_{n-1} = a^m and ê_i = (-1)^i b^{im} in the quotient
        sign = 1 if (n - 1) % 2 == 0 else -1
        return ring, [a ** m - b ** (m * (n - 1)) * sign, a * b]
    # ampn: y = x^p, k = m/p; e_i(x^m) = e_i(y^k) and e_n(y) = g^p
    k = m // p
    ring = _ampn_ring(pair, field)
    E = e_ring(n, field)
    images = ring.gens()[: n - 1] + [ring.gens()[n - 1] ** p]
    rels = [hat_in_elementary(i, n, k, E).substitute(images, ring) for i in range(1, n)]
    rels.append(ring.gens()[n - 1] ** k)
    return ring, rels


def relative_coinvariant(pair: RelativePair, cap: int | None = DEFAULT_CAP, field: FieldSpec = QQ) -> ArtinianAlgebra:
    _guard(pair.expected_dim, cap, pair.label)
    ring, rels = relative_presentation(pair, field)
    for r in rels:
        assert r.is_homogeneous(), f"relation {r} is not homogeneous"
    A = ArtinianAlgebra(ring, rels, name=pair.label)
    assert A.dim == pair.expected_dim, (A.dim, pair.expected_dim)
    return A


def relative_extension(pair: RelativePair, cap: int | None = DEFAULT_CAP, field: FieldSpec = QQ,
                       with_base: bool = True) -> ExtensionSpec:
    """``R_W`` as a free extension of the relative coinvariants with fiber ``R_K``."""
    W, K = pair.W, pair.K
    _guard(W.order, cap, str(W))
    C = coinvariant_ring(W, cap=None, field=field)
    ring = C.ring
    n = pair.n
    if pair.tag == "amn":
        iota = [esym(ring, range(n), i) for i in range(1, n + 1)]
        fiber = list(iota)
    elif pair.tag == "ampn":
        iota = [esym(ring, range(n), i, pair.p) for i in range(1, n)] + [esym(ring, range(n), n)]
        fiber = list(iota)
    else:
        first = range(n - 1)
        a = esym(ring, first, n - 1)
        b = ring.var(n - 1)
        iota = [a, b]
        fiber = [esym(ring, first, i, pair.m) for i in range(1, n - 1)] + [a, b]
    base = relative_coinvariant(pair, cap=None, field=field) if with_base else None
    return ExtensionSpec(C, fiber, iota, base)


# -- closed forms ------------------------------------------------------------------


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _geometric(step: int, count: int) -> list[int]:
    """``1 + t^step + ... + t^{(count-1)step}``."""
    out = [0] * ((count - 1) * step + 1)
    for i in range(count):
        out[i * step] += 1
    return out


def hilbert_poly_closed(pair: RelativePair) -> HilbertFunction:
    m, n, p = pair.m, pair.n, pair.p
    if pair.tag == "amn":
        coeffs = [1]
        for i in range(1, n + 1):
            coeffs = _poly_mul(coeffs, _geometric(i, m))
    elif pair.tag == "ampn":
        k = m // p
        coeffs = _geometric(n, k)
        for i in range(1, n):
            coeffs = _poly_mul(coeffs, _geometric(i * p, k))
    else:
        top = m * (n - 1)
        coeffs = [1] * (top + 1)
        for i in range(1, m):
            coeffs[i * (n - 1)] += 1
    return HilbertFunction(tuple(coeffs))


def restricted_partition_count(j: int, m: int, n: int) -> int:
    """Partitions of j into parts of size at most n, each size used at most m-1 times."""
    if j < 0:
        raise ValueError("j must be non-negative")
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    counts = [0] * (j + 1)
    counts[0] = 1
    for size in range(1, n + 1):
        new = [0] * (j + 1)
        for total, c in enumerate(counts):
            if c:
                for mult in range(m):
                    t = total + mult * size
                    if t > j:
                        break
                    new[t] += c
        counts = new
    return counts[j]


# -- scans --------------------------------------------------------------------------


@dataclass
class AlmkvistRow:
    n: int
    unimodal: bool
    violation: tuple[int, int, int] | None
    degree: int  # N = (m-1)·C(n+1, 2)


@dataclass
class AlmkvistScan:
    m: int
    rows: list[AlmkvistRow]

    @property
    def non_unimodal(self) -> list[int]:
        return [r.n for r in self.rows if not r.unimodal]

    @property
    def largest_violation(self) -> int | None:
        bad = self.non_unimodal
        return max(bad) if bad else None

    @property
    def stable_from(self) -> int | None:
        """Smallest scanned n after which every scanned n is unimodal."""
        if not self.rows or not self.rows[-1].unimodal:
            return None
        start = self.rows[-1].n
        for r in reversed(self.rows):
            if not r.unimodal:
                break
            start = r.n
        return start


def almkvist_scan(m: int, ns) -> AlmkvistScan:
    if m < 2:
        raise ValueError("m must be at least 2")
    rows = []
    for n in ns:
        H = hilbert_poly_closed(RelativePair("amn", m, n))
        u = is_unimodal(H)
        rows.append(AlmkvistRow(n, u.ok, u.witness, (m - 1) * n * (n + 1) // 2))
    return AlmkvistScan(m, rows)


@dataclass
class GrScanRow:
    label: str
    hilbert: HilbertFunction
    gr_hilbert: HilbertFunction
    hilbert_conjugate: Partition
    gr_conjugate: Partition
    sljt: object = field(repr=False, default=None)

    @property
    def equal(self) -> bool:
        return self.hilbert_conjugate == self.gr_conjugate


def gr_conjugate_scan(items, trials: int = 20, seed: int = 0, cap: int | None = DEFAULT_CAP) -> list[GrScanRow]:
    """Compare H(A)^∨ with H(Gr)^∨ and search for SLJT elements.

    ``items`` may mix RelativePair objects and ready-made algebras.
    """
    from .verdicts import sljt_verdict

    rows = []
    for item in items:
        A = relative_coinvariant(item, cap=cap) if isinstance(item, RelativePair) else item
        G = A.assoc_graded_hilbert()
        rows.append(GrScanRow(
            label=item.label if isinstance(item, RelativePair) else (A.name or repr(A)),
            hilbert=A.hilbert,
            gr_hilbert=G,
            hilbert_conjugate=A.hilbert.conjugate(),
            gr_conjugate=G.conjugate(),
            sljt=sljt_verdict(A, trials=trials, seed=seed),
        ))
    return rows
