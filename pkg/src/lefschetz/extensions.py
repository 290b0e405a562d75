"""Tensor products and free extensions ``k → A → C → B → k``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import ArtinianAlgebra
from .errors import HypothesisViolation, PresentationMismatch
from .groebner import buchberger, ideal_equal
from .jordan import jordan_type
from .linalg import Echelon
from .partitions import Partition, hilbert_tensor, is_symmetric, tensor_jordan_type
from .polynomials import Polynomial, WeightedRing
from .verdicts import is_sl_element


@dataclass
class TensorProduct:
    algebra: ArtinianAlgebra
    left_positions: tuple[int, ...]
    right_positions: tuple[int, ...]

    def left(self, p: Polynomial) -> Polynomial:
        return p.embed(self.algebra.ring, self.left_positions)

    def right(self, p: Polynomial) -> Polynomial:
        return p.embed(self.algebra.ring, self.right_positions)


def _fresh(name: str, taken: set[str]) -> str:
    k = 2
    while f"{name}_{k}" in taken:
        k += 1
    return f"{name}_{k}"


def tensor_product(A: ArtinianAlgebra, B: ArtinianAlgebra) -> TensorProduct:
    if A.field != B.field:
        raise ValueError(f"cannot tensor over different fields {A.field} and {B.field}")
    names = list(A.ring.names)
    taken = set(names) | set(B.ring.names)
    for v in B.ring.names:
        new = v if v not in names else _fresh(v, taken)
        taken.add(new)
        names.append(new)
    ring = WeightedRing(tuple(names), A.ring.weights + B.ring.weights, A.field)
    na, nb = A.ring.ngens, B.ring.ngens
    left, right = tuple(range(na)), tuple(range(na, na + nb))
    gens = [g.embed(ring, left) for g in A.generators] + [g.embed(ring, right) for g in B.generators]
    label = None
    if A.name and B.name:
        label = f"{A.name} ⊗ {B.name}"
    C = ArtinianAlgebra(ring, gens, name=label)
    assert C.hilbert == hilbert_tensor(A.hilbert, B.hilbert)
    return TensorProduct(C, left, right)


def tensor_algebra(A: ArtinianAlgebra, B: ArtinianAlgebra) -> ArtinianAlgebra:
    """``A ⊗_k B``; clashing variable names in B get a ``_2`` style suffix."""
    return tensor_product(A, B).algebra


@dataclass
class TensorLefschetzReport:
    predicted: Partition
    actual: Partition
    hilbert_conjugate: Partition
    sl_left: bool
    sl_right: bool
    sl_tensor: bool
    notes: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.predicted == self.actual


def tensor_lefschetz_report(A: ArtinianAlgebra, B: ArtinianAlgebra, ell_A, ell_B) -> TensorLefschetzReport:
    """Clebsch–Gordan prediction versus the computed Jordan type of ``ℓ_A + ℓ_B``.

    Failed hypotheses (asymmetric Hilbert functions, small characteristic)
    are listed in ``notes``; the Jordan type identity itself is asserted
    whenever the characteristic is 0 or exceeds the socle degree of the tensor.
    """
    a, b = A.element(ell_A), B.element(ell_B)
    for name, alg, e in (("A", A, a), ("B", B, b)):
        if not (e.degree == 1 or e.is_zero() and not alg.degree_indices(1)):
            raise HypothesisViolation(f"element {e} of {name} is not a linear form")
    T = tensor_product(A, B)
    C = T.algebra
    ell = C.element(T.left(a.polynomial) + T.right(b.polynomial))
    predicted = tensor_jordan_type(jordan_type(A, a), jordan_type(B, b))
    actual = jordan_type(C, ell)
    notes = []
    if not is_symmetric(A.hilbert):
        notes.append(f"H(A) = {A.hilbert} is not symmetric")
    if not is_symmetric(B.hilbert):
        notes.append(f"H(B) = {B.hilbert} is not symmetric")
    small = C.field.characteristic_too_small(C.socle_degree)
    if small:
        notes.append(f"characteristic {C.field.characteristic} does not exceed j_C = {C.socle_degree}")
    elif predicted != actual:
        raise AssertionError(f"Clebsch–Gordan prediction {predicted} differs from computed {actual}")
    return TensorLefschetzReport(
        predicted=predicted,
        actual=actual,
        hilbert_conjugate=C.hilbert.conjugate(),
        sl_left=bool(is_sl_element(A, a)),
        sl_right=bool(is_sl_element(B, b)),
        sl_tensor=bool(is_sl_element(C, ell)),
        notes=notes,
    )


@dataclass
class ExtensionSpec:
    """A candidate free extension presented inside one polynomial ring.

    ``C`` is the total algebra.  Adding ``fiber_gens`` to its ideal presents
    the fiber ``B`` (so π is the canonical surjection).  ``iota_images`` are
    the images in C's ring of the base's variables, in order.  With
    ``fiber_is_full_ideal`` the fiber generators are taken as B's whole
    ideal, which must then contain C's ideal.
    """

    C: ArtinianAlgebra
    fiber_gens: Sequence[Polynomial]
    iota_images: Sequence[Polynomial]
    A: ArtinianAlgebra | None = None
    fiber_is_full_ideal: bool = False


@dataclass
class FreeExtensionReport:
    dim_C: int
    dim_A: int
    dim_B: int
    dim_product_ok: bool
    kernel_ok: bool
    B: ArtinianAlgebra = field(repr=False)
    base_from_subalgebra: bool = False

    @property
    def verdict(self) -> bool:
        return self.dim_product_ok and self.kernel_ok

    def __bool__(self):
        return self.verdict

    def to_dict(self) -> dict:
        return {
            "dim_C": self.dim_C,
            "dim_A": self.dim_A,
            "dim_B": self.dim_B,
            "hilbert_B": list(self.B.hilbert.values),
            "dim_product_ok": self.dim_product_ok,
            "kernel_ok": self.kernel_ok,
            "verdict": self.verdict,
            "base_from_subalgebra": self.base_from_subalgebra,
        }


def subalgebra_dimension(C: ArtinianAlgebra, generators: Sequence[Polynomial]) -> int:
    """Dimension of the k-subalgebra of C generated by the given elements."""
    ops = [C.mult_operator(C.element(g)) for g in generators if C.vector(g)]
    ech = Echelon()
    one = C.vector(C.ring.one())
    ech.add(one)
    queue = [one]
    while queue:
        v = queue.pop()
        for L in ops:
            w = L.apply(v)
            if w and ech.add(w):
                queue.append(w)
    return len(ech)


def _check_iota(spec: ExtensionSpec) -> None:
    A, C = spec.A, spec.C
    images = [C.ring.parse(g) if isinstance(g, str) else g for g in spec.iota_images]
    if len(images) != A.ring.ngens:
        raise PresentationMismatch(
            f"{len(images)} iota images given for {A.ring.ngens} base variables"
        )
    for v, w, img in zip(A.ring.names, A.ring.weights, images):
        if img and (not img.is_homogeneous() or img.degree() != w):
            raise PresentationMismatch(f"iota({v}) = {img} is not homogeneous of degree {w}")
    for g in A.generators:
        if not C.gb.contains(g.substitute(images, C.ring)):
            raise PresentationMismatch(f"iota does not respect the relation {g} of the base")


def verify_free_extension(spec: ExtensionSpec) -> FreeExtensionReport:
    """Check ``ker π = ι(𝔪_A)·C`` and ``dim C = dim A · dim B``.

    Together these are equivalent to C being a free extension of A with
    fiber B.  Without an explicit base, dim A is taken to be the dimension
    of the subalgebra generated by the iota images.
    """
    C = spec.C
    ring = C.ring
    fiber = [ring.parse(g) if isinstance(g, str) else g for g in spec.fiber_gens]
    images = [ring.parse(g) if isinstance(g, str) else g for g in spec.iota_images]
    if spec.fiber_is_full_ideal:
        fgb = buchberger(fiber, ring)
        if not fgb.contains_ideal(C.gb):
            raise PresentationMismatch("the fiber ideal does not contain the ideal of C")
        B = ArtinianAlgebra(ring, fiber)
    else:
        B = ArtinianAlgebra(ring, list(C.generators) + fiber)
    for img in images:
        if img.constant_term():
            raise PresentationMismatch(f"iota image {img} is not in the maximal ideal")
    if spec.A is not None:
        _check_iota(spec)
        dim_A = spec.A.dim
    else:
        dim_A = subalgebra_dimension(C, images)
    kernel_ok = ideal_equal(B.gb, buchberger(list(C.gb.generators) + images, ring))
    return FreeExtensionReport(
        dim_C=C.dim,
        dim_A=dim_A,
        dim_B=B.dim,
        dim_product_ok=C.dim == dim_A * B.dim,
        kernel_ok=kernel_ok,
        B=B,
        base_from_subalgebra=spec.A is None,
    )
