"""Buchberger's algorithm, normal forms and standard-monomial bases.

All computations use the ring's weighted-degree reverse-lexicographic order, so
for ideals that are homogeneous with respect to the weights the standard
monomials of each degree count the graded pieces of the quotient directly.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotArtinian, NotHomogeneous
from .partitions import HilbertFunction
from .polynomials import Monomial, Polynomial, WeightedRing

ORDER_NAME = "weighted-degree reverse-lexicographic"


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _heap_key(ring: WeightedRing, m: Monomial):
    # min-heap key whose smallest element is the largest monomial
    return (-ring.degree(m), tuple(reversed(m)))


def _reduce(ring: WeightedRing, terms: dict, basis: Sequence[Polynomial], full: bool = True) -> dict:
    """Remainder of ``terms`` on division by the monic polynomials in ``basis``."""
    p = dict(terms)
    heap = [(_heap_key(ring, m), m) for m in p]
    heapq.heapify(heap)
    queued = set(p)
    leads = [(g.leading_monomial(), g) for g in basis]
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = p.get(m)
        if not c:
            p.pop(m, None)
            continue
        for lm, g in leads:
            if _divides(lm, m):
                q = _sub(m, lm)
                for gm, gc in g.terms.items():
                    mm = tuple(a + b for a, b in zip(gm, q))
                    v = p.get(mm)
                    v = -c * gc if v is None else v - c * gc
                    if v:
                        p[mm] = v
                        if mm not in queued:
                            queued.add(mm)
                            heapq.heappush(heap, (_heap_key(ring, mm), mm))
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = c
            del p[m]
            if not full:
                rem.update(p)
                return rem
    return rem


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis; generators are monic and sorted by leading monomial."""

    ring: WeightedRing
    generators: tuple[Polynomial, ...]
    order: str = ORDER_NAME

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial() for g in self.generators]

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def contains_ideal(self, other: "GroebnerBasis | Iterable[Polynomial]") -> bool:
        gens = other.generators if isinstance(other, GroebnerBasis) else other
        return all(self.contains(g) for g in gens)

    def is_unit_ideal(self) -> bool:
        return any(not any(g.leading_monomial()) for g in self.generators)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.generators) + "}"


def buchberger(gens: Iterable[Polynomial], ring: WeightedRing | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are processed smallest-lcm first with Buchberger's coprime and chain
    criteria.  The zero ideal gives an empty basis.
    """
    gens = [g for g in gens]
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")

    G: list[Polynomial] = []
    leads: list[Monomial] = []
    pending: set[tuple[int, int]] = set()
    heap: list = []

    def push_pairs(k: int):
        for i in range(k):
            L = _lcm(leads[i], leads[k])
            pending.add((i, k))
            heapq.heappush(heap, (_heap_key(ring, L)[0], _heap_key(ring, L)[1], i, k))

    def add(h: Polynomial):
        h = h.monic()
        if not any(h.leading_monomial()):
            # unit ideal: short-circuit
            G.clear()
            leads.clear()
            G.append(h)
            leads.append(h.leading_monomial())
            pending.clear()
            heap.clear()
            return
        G.append(h)
        leads.append(h.leading_monomial())
        push_pairs(len(G) - 1)

    for g in sorted((g for g in gens if g), key=lambda p: ring.order_key(p.leading_monomial())):
        r = _reduce(ring, g.terms, G)
        if r:
            add(Polynomial(ring, r))
            if len(G) == 1 and not any(leads[0]):
                break

    while heap:
        _, _, i, k = heapq.heappop(heap)
        if (i, k) not in pending:
            continue
        pending.discard((i, k))
        li, lk = leads[i], leads[k]
        L = _lcm(li, lk)
        if all(a == 0 or b == 0 for a, b in zip(li, lk)):
            continue  # coprime leading monomials
        chain = False
        for j in range(len(G)):
            if j in (i, k) or not _divides(leads[j], L):
                continue
            if (min(i, j), max(i, j)) not in pending and (min(k, j), max(k, j)) not in pending:
                chain = True
                break
        if chain:
            continue
        s = G[i].mul_term(_sub(L, li), 1) - G[k].mul_term(_sub(L, lk), 1)
        r = _reduce(ring, s.terms, G)
        if r:
            add(Polynomial(ring, r))
            if not any(leads[-1]):
                break

    return _interreduce(ring, G)


def _interreduce(ring: WeightedRing, G: list[Polynomial]) -> GroebnerBasis:
    G = [g.monic() for g in G if g]
    if any(not any(g.leading_monomial()) for g in G):
        return GroebnerBasis(ring, (ring.one(),))
    G.sort(key=lambda g: ring.order_key(g.leading_monomial()))
    minimal: list[Polynomial] = []
    for g in G:
        lm = g.leading_monomial()
        if any(_divides(h.leading_monomial(), lm) for h in minimal):
            continue
        minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = _reduce(ring, g.terms, others)
        reduced.append(Polynomial(ring, r).monic())
    reduced.sort(key=lambda g: ring.order_key(g.leading_monomial()))
    return GroebnerBasis(ring, tuple(reduced))


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of ``p`` supported on standard monomials."""
    if p.ring != gb.ring:
        raise ValueError("polynomial and Gröbner basis live in different rings")
    return Polynomial(p.ring, _reduce(p.ring, p.terms, gb.generators))


def is_homogeneous(p: Polynomial, ring: WeightedRing | None = None) -> bool:
    if ring is not None and ring != p.ring:
        p = Polynomial(ring, p.terms)
    return p.is_homogeneous()


@dataclass(frozen=True)
class QuotientBasis:
    """Standard monomials of an Artinian quotient, sorted by degree then order."""

    ring: WeightedRing
    monomials: tuple[Monomial, ...]
    degrees: tuple[int, ...]

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def index(self) -> dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.monomials)}

    def by_degree(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return out

    def labels(self) -> list[str]:
        return [str(self.ring.monomial(m)) for m in self.monomials]


def _pure_power_bounds(ring: WeightedRing, leads: Sequence[Monomial]) -> list[int | None]:
    bounds: list[int | None] = [None] * ring.ngens
    for lm in leads:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or lm[i] < bounds[i]:
                bounds[i] = lm[i]
    return bounds


def is_artinian(gb: GroebnerBasis) -> bool:
    if gb.is_unit_ideal():
        return True
    return all(b is not None for b in _pure_power_bounds(gb.ring, gb.leading_monomials))


def quotient_monomial_basis(gb: GroebnerBasis) -> QuotientBasis:
    ring = gb.ring
    leads = gb.leading_monomials
    if gb.is_unit_ideal():
        return QuotientBasis(ring, (), ())
    bounds = _pure_power_bounds(ring, leads)
    missing = [ring.names[i] for i, b in enumerate(bounds) if b is None]
    if missing:
        raise NotArtinian(f"no power of {', '.join(missing)} lies in the leading-term ideal")

    out: list[Monomial] = []
    n = ring.ngens
    mono = [0] * n

    def standard(m) -> bool:
        return not any(_divides(lm, m) for lm in leads)

    def rec(k: int):
        if k == n:
            out.append(tuple(mono))
            return
        for e in range(bounds[k]):
            mono[k] = e
            if not standard(mono):
                break
            rec(k + 1)
        mono[k] = 0

    rec(0)
    out.sort(key=lambda m: (ring.degree(m), ring.order_key(m)))
    return QuotientBasis(ring, tuple(out), tuple(ring.degree(m) for m in out))


def hilbert_function(gb: GroebnerBasis, ring: WeightedRing | None = None) -> HilbertFunction:
    """Number of standard monomials in each weighted degree."""
    if ring is not None and ring != gb.ring:
        raise ValueError("Gröbner basis belongs to a different ring")
    for g in gb.generators:
        if not g.is_homogeneous():
            raise NotHomogeneous(f"ideal is not homogeneous for the weights: {g}", generator=g)
    basis = quotient_monomial_basis(gb)
    if not basis.monomials:
        return HilbertFunction(())
    values = [0] * (max(basis.degrees) + 1)
    for d in basis.degrees:
        values[d] += 1
    return HilbertFunction(tuple(values))


def ideal_equal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    """Reduced bases for the same order are unique, so compare them directly."""
    return a.ring == b.ring and set(a.generators) == set(b.generators)
