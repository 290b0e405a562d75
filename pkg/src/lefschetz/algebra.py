"""Graded Artinian quotients of weighted polynomial rings.

An :class:`ArtinianAlgebra` is a finite-dimensional vector space with the
standard monomials as basis; multiplication by any element becomes a sparse
matrix on that basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotConnected, NotHomogeneous, NotInMaximalIdeal
from .groebner import GroebnerBasis, buchberger, hilbert_function, quotient_monomial_basis
from .linalg import LinearMap, Vector, axpy, span_basis
from .partitions import HilbertFunction, Partition
from .polynomials import Monomial, Polynomial, WeightedRing


class ArtinianAlgebra:
    """``ring / (generators)`` with its quotient basis and Hilbert function.

    Raises NotConnected when the ideal is the whole ring, NotHomogeneous when a
    generator is not homogeneous for the weights and NotArtinian when the
    quotient is infinite dimensional.
    """

    def __init__(self, ring: WeightedRing, generators: Iterable, name: str | None = None):
        gens = [ring.parse(g) if isinstance(g, str) else g for g in generators]
        for g in gens:
            if g.ring != ring:
                raise ValueError(f"generator {g} is not in {ring}")
        for g in gens:
            if not g.is_homogeneous():
                raise NotHomogeneous(
                    f"generator {g} is not homogeneous for weights {ring.weights}", generator=g
                )
        gb = buchberger(gens, ring)
        if gb.is_unit_ideal():
            raise NotConnected("the ideal contains a unit")
        self.ring = ring
        self.generators = tuple(gens)
        self.gb: GroebnerBasis = gb
        self.basis = quotient_monomial_basis(gb)
        self.hilbert: HilbertFunction = hilbert_function(gb)
        self.name = name
        self._index = self.basis.index()
        self._mono_cache: dict[Monomial, Vector] = {}
        ring.field.warn_if_small(self.socle_degree)

    # -- basic data -------------------------------------------------------------
    @property
    def field(self):
        return self.ring.field

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def socle_degree(self) -> int:
        return self.hilbert.socle_degree

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.basis.degrees

    def degree_indices(self, d: int) -> list[int]:
        return [i for i, e in enumerate(self.basis.degrees) if e == d]

    @cached_property
    def pieces(self) -> dict[int, list[int]]:
        return self.basis.by_degree()

    def is_standard_graded(self) -> bool:
        """True when the maximal ideal is generated in degree one."""
        return self.assoc_graded_hilbert() == self.hilbert

    def __repr__(self):
        label = self.name or f"{self.ring.field}[{','.join(self.ring.names)}]/({', '.join(map(str, self.generators))})"
        return f"<ArtinianAlgebra {label} dim={self.dim} H={self.hilbert}>"

    # -- vectors and elements --------------------------------------------------
    def monomial_vector(self, mono: Monomial) -> Vector:
        """Coordinates of the normal form of a monomial (memoised)."""
        mono = tuple(mono)
        cached = self._mono_cache.get(mono)
        if cached is not None:
            return cached
        idx = self._index.get(mono)
        if idx is not None:
            vec = {idx: self.field.one}
        else:
            j = next(i for i, e in enumerate(mono) if e)
            smaller = list(mono)
            smaller[j] -= 1
            prev = self.monomial_vector(tuple(smaller))
            vec = {}
            for i, c in prev.items():
                shifted = list(self.basis.monomials[i])
                shifted[j] += 1
                shifted = tuple(shifted)
                if shifted in self._index:
                    axpy(vec, c, {self._index[shifted]: self.field.one})
                else:
                    axpy(vec, c, self._reduced(shifted))
        self._mono_cache[mono] = vec
        return vec

    def _reduced(self, mono: Monomial) -> Vector:
        cached = self._mono_cache.get(mono)
        if cached is None:
            nf = self.gb.normal_form(self.ring.monomial(mono))
            cached = {self._index[m]: c for m, c in nf.terms.items()}
            self._mono_cache[mono] = cached
        return cached

    def vector(self, p) -> Vector:
        if isinstance(p, AlgebraElement):
            return dict(p.vector)
        if isinstance(p, str):
            p = self.ring.parse(p)
        out: Vector = {}
        for m, c in p.terms.items():
            axpy(out, c, self.monomial_vector(m))
        return out

    def to_polynomial(self, vec: Vector) -> Polynomial:
        return Polynomial(self.ring, {self.basis.monomials[i]: c for i, c in vec.items()})

    def element(self, p) -> "AlgebraElement":
        if isinstance(p, AlgebraElement):
            if p.algebra is not self:
                raise ValueError("element belongs to a different algebra")
            return p
        if isinstance(p, str):
            p = self.ring.parse(p)
        elif not isinstance(p, Polynomial):
            p = self.ring.const(p)
        vec = self.vector(p)
        return AlgebraElement(self, self.to_polynomial(vec), vec)

    def element_from_vector(self, vec: Vector) -> "AlgebraElement":
        return AlgebraElement(self, self.to_polynomial(vec), dict(vec))

    def variable(self, v) -> "AlgebraElement":
        return self.element(self.ring.var(v))

    # -- operators ----------------------------------------------------------------
    def mult_operator(self, elem) -> LinearMap:
        """Matrix of multiplication by ``elem`` on the standard-monomial basis."""
        elem = self.element(elem)
        if not elem.in_maximal_ideal():
            raise NotInMaximalIdeal(f"{elem} has a nonzero constant term")
        return self._mult(elem.polynomial)

    def _mult(self, poly: Polynomial) -> LinearMap:
        cols = []
        for b in self.basis.monomials:
            col: Vector = {}
            for m, c in poly.terms.items():
                axpy(col, c, self.monomial_vector(tuple(x + y for x, y in zip(m, b))))
            cols.append(col)
        return LinearMap(cols, one=self.field.one)

    @cached_property
    def variable_maps(self) -> list[LinearMap]:
        return [self._mult(self.ring.var(j)) for j in range(self.ring.ngens)]

    def multiply(self, a, b) -> "AlgebraElement":
        a, b = self.element(a), self.element(b)
        return self.element(a.polynomial * b.polynomial)

    # -- local structure ------------------------------------------------------------
    def maximal_ideal_powers(self) -> list[int]:
        """``[dim m^0, dim m^1, ...]`` ending with 0, computed by span growth."""
        current = [{i: self.field.one} for i in range(self.dim)]
        dims = [self.dim]
        while current:
            images = (L.apply(v) for L in self.variable_maps for v in current)
            current = span_basis(images)
            dims.append(len(current))
        return dims

    def assoc_graded_hilbert(self) -> HilbertFunction:
        """Hilbert function of the associated graded algebra of the localisation."""
        return assoc_graded_hilbert(self)

    def homogeneous_positive_basis(self, degree: int | None = None) -> list[int]:
        if degree is None:
            return [i for i, d in enumerate(self.degrees) if d > 0]
        return self.degree_indices(degree)


@dataclass(eq=False)
class AlgebraElement:
    algebra: ArtinianAlgebra
    polynomial: Polynomial
    vector: Vector

    @property
    def degree(self) -> int | None:
        """Weighted degree if homogeneous and nonzero, else None."""
        degs = {self.algebra.degrees[i] for i in self.vector}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return len({self.algebra.degrees[i] for i in self.vector}) <= 1

    def is_zero(self) -> bool:
        return not self.vector

    def in_maximal_ideal(self) -> bool:
        return not self.polynomial.constant_term()

    def __add__(self, other):
        other = self.algebra.element(other)
        v = dict(self.vector)
        axpy(v, self.algebra.field.one, other.vector)
        return self.algebra.element_from_vector(v)

    def __mul__(self, other):
        return self.algebra.multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                other = self.algebra.element(other)
            except Exception:
                return NotImplemented
        return other.algebra is self.algebra and other.vector == self.vector

    def __str__(self):
        return str(self.polynomial)


def build_algebra(ring: WeightedRing, gens: Iterable, name: str | None = None) -> ArtinianAlgebra:
    return ArtinianAlgebra(ring, gens, name=name)


def assoc_graded_hilbert(A: ArtinianAlgebra) -> HilbertFunction:
    dims = A.maximal_ideal_powers()
    return HilbertFunction(tuple(dims[i] - dims[i + 1] for i in range(len(dims) - 1)))


def trim_presentation(ring: WeightedRing, gens: Sequence[Polynomial | str]):
    """Drop variables that a generator expresses in terms of the others.

    A generator ``c*x + q`` where ``x`` does not occur in ``q`` lets us
    substitute ``x = -q/c`` everywhere.  Generators with fewer terms are used
    first.  Returns ``(ring, generators, eliminated)`` where ``eliminated``
    maps each removed variable name to its replacement in the original ring.
    """
    gens = [ring.parse(g) if isinstance(g, str) else g for g in gens]
    gens = [g for g in gens if g]
    eliminated: dict[str, Polynomial] = {}
    while True:
        choice = None
        for g in sorted(gens, key=lambda p: len(p.terms)):
            for i in sorted(g.variables(), key=lambda i: -ring.weights[i]):
                unit = tuple(1 if k == i else 0 for k in range(ring.ngens))
                if unit not in g.terms:
                    continue
                rest = g - ring.monomial(unit, g.terms[unit])
                if i not in rest.variables():
                    choice = (g, i, rest * (-ring.field.one / g.terms[unit]))
                    break
            if choice:
                break
        if choice is None:
            break
        g, i, value = choice
        images = [ring.var(k) if k != i else value for k in range(ring.ngens)]
        gens = [h.substitute(images, ring) for h in gens if h is not g]
        gens = [h for h in gens if h]
        for name, val in list(eliminated.items()):
            eliminated[name] = val.substitute(images, ring)
        eliminated[ring.names[i]] = value
    keep = sorted({k for k in range(ring.ngens) if ring.names[k] not in eliminated})
    new_ring = WeightedRing(
        tuple(ring.names[k] for k in keep), tuple(ring.weights[k] for k in keep), ring.field
    )
    position = {k: n for n, k in enumerate(keep)}
    out = []
    for h in gens:
        terms = {tuple(m[k] for k in keep): c for m, c in h.terms.items()}
        if any(m[k] for m in h.terms for k in range(ring.ngens) if k not in position):
            raise AssertionError("eliminated variable survived substitution")
        out.append(Polynomial(new_ring, terms))
    return new_ring, out, eliminated
