"""Jordan types and Jordan strings of multiplication maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .algebra import AlgebraElement, ArtinianAlgebra
from .errors import NotInMaximalIdeal
from .linalg import Echelon, LinearMap, kernel, rank
from .partitions import Dominance, Partition, dominates


def partition_from_ranks(ranks: list[int]) -> Partition:
    """Block sizes from ``[rank L^0, rank L^1, ..., 0]``.

    The number of blocks of size at least k is ``r[k-1] - r[k]``.
    """
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    at_least.append(0)
    parts = []
    for k in range(1, len(at_least)):
        parts += [k] * (at_least[k - 1] - at_least[k])
    return Partition.from_parts(parts)


def _operator(A: ArtinianAlgebra, ell) -> tuple[AlgebraElement, LinearMap]:
    ell = A.element(ell)
    if not ell.in_maximal_ideal():
        raise NotInMaximalIdeal(f"{ell} has a nonzero constant term")
    return ell, A.mult_operator(ell)


def rank_sequence(A: ArtinianAlgebra, ell) -> list[int]:
    """Ranks of ``ℓ, ℓ², ...`` up to and including the first zero."""
    _, L = _operator(A, ell)
    return L.power_ranks()[1:]


def jordan_type(A: ArtinianAlgebra, ell) -> Partition:
    _, L = _operator(A, ell)
    P = partition_from_ranks(L.power_ranks())
    assert P.n == A.dim
    return P


@dataclass
class JordanString:
    generator: AlgebraElement
    length: int
    degree: int | None
    vectors: list = field(repr=False, default_factory=list)

    def elements(self) -> list[AlgebraElement]:
        A = self.generator.algebra
        return [A.element_from_vector(v) for v in self.vectors]

    def as_dict(self) -> dict:
        return {"generator": str(self.generator), "length": self.length, "degree": self.degree}


def jordan_strings(A: ArtinianAlgebra, ell) -> list[JordanString]:
    """A basis of ``A`` made of strings ``z, ℓz, ..., ℓ^{p-1} z``.

    For each length ``k`` from the nilpotency index down, generators are taken
    greedily (in quotient-basis order) from a basis of ``ker ℓ^k`` that is
    independent of ``ker ℓ^{k-1} + ℓ·ker ℓ^{k+1}``.  Kernels of a homogeneous
    map are spanned by homogeneous vectors, so for homogeneous ``ℓ`` every
    generator is homogeneous and its degree is recorded.
    """
    ell, L = _operator(A, ell)
    one = A.field.one
    n = A.dim
    graded = ell.is_homogeneous()

    # ker L^k for k = 0..p
    kernels: list[list[dict]] = [[]]
    cols = [{j: one} for j in range(n)]
    while len(kernels[-1]) < n:
        cols = [L.apply(c) for c in cols]
        kernels.append(kernel(cols, one))
    p = len(kernels) - 1

    strings: list[JordanString] = []
    for k in range(p, 0, -1):
        ech = Echelon()
        for v in kernels[k - 1]:
            ech.add(v)
        if k < p:
            for v in kernels[k + 1]:
                ech.add(L.apply(v))
        for z in kernels[k]:
            if ech.add(z):
                vecs = [z]
                for _ in range(k - 1):
                    vecs.append(L.apply(vecs[-1]))
                gen = A.element_from_vector(z)
                deg = gen.degree if graded else None
                strings.append(JordanString(gen, k, deg, vecs))
    strings.sort(key=lambda s: -s.length)
    assert rank(v for s in strings for v in s.vectors) == n
    return strings


def _cmp_label(d: Dominance) -> str:
    return {
        Dominance.EQUAL: "equal",
        Dominance.LESS: "less",
        Dominance.GREATER: "greater",
        Dominance.INCOMPARABLE: "incomparable",
    }[d]


@dataclass
class JordanReport:
    algebra: ArtinianAlgebra
    element: AlgebraElement
    jordan_type: Partition
    rank_sequence: list[int]
    hilbert_conjugate: Partition
    gr_conjugate: Partition
    is_sl_element: bool
    has_sljt: bool
    strings: list[JordanString] | None = None

    @property
    def vs_hilbert(self) -> Dominance:
        return dominates(self.jordan_type, self.hilbert_conjugate)

    @property
    def vs_gr(self) -> Dominance:
        return dominates(self.jordan_type, self.gr_conjugate)

    def to_dict(self) -> dict:
        A = self.algebra
        out: dict[str, Any] = {
            "algebra": algebra_summary(A),
            "element": str(self.element),
            "jordan_type": list(self.jordan_type.parts),
            "rank_sequence": list(self.rank_sequence),
        }
        if self.strings is not None:
            out["strings"] = [s.as_dict() for s in self.strings]
        out["verdicts"] = {"sl": self.is_sl_element, "sljt": self.has_sljt}
        out["comparisons"] = {
            "hilbert_conjugate": list(self.hilbert_conjugate.parts),
            "gr_conjugate": list(self.gr_conjugate.parts),
            "vs_hilbert_conjugate": _cmp_label(self.vs_hilbert),
            "vs_gr_conjugate": _cmp_label(self.vs_gr),
        }
        return out


_INT_LIST = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_CMP = {"enum": ["equal", "less", "greater", "incomparable"]}

ALGEBRA_SCHEMA = {
    "type": "object",
    "required": ["vars", "weights", "field", "ideal", "dim", "hilbert", "socle"],
    "properties": {
        "vars": {"type": "array", "items": {"type": "string"}},
        "weights": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "field": {"type": "string"},
        "ideal": {"type": "array", "items": {"type": "string"}},
        "dim": {"type": "integer", "minimum": 1},
        "hilbert": _INT_LIST,
        "socle": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

# JSON Schema (draft 2020-12) for ``JordanReport.to_dict()`` and ``lefschetz jordan --json``.
JORDAN_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "JordanReport",
    "type": "object",
    "required": ["algebra", "element", "jordan_type", "rank_sequence", "verdicts", "comparisons"],
    "properties": {
        "algebra": ALGEBRA_SCHEMA,
        "element": {"type": "string"},
        "jordan_type": _INT_LIST,
        "rank_sequence": _INT_LIST,
        "strings": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["generator", "length", "degree"],
                "properties": {
                    "generator": {"type": "string"},
                    "length": {"type": "integer", "minimum": 1},
                    "degree": {"type": ["integer", "null"]},
                },
            },
        },
        "verdicts": {
            "type": "object",
            "required": ["sl", "sljt"],
            "properties": {"sl": {"type": "boolean"}, "sljt": {"type": "boolean"}},
        },
        "comparisons": {
            "type": "object",
            "required": ["hilbert_conjugate", "gr_conjugate", "vs_hilbert_conjugate", "vs_gr_conjugate"],
            "properties": {
                "hilbert_conjugate": _INT_LIST,
                "gr_conjugate": _INT_LIST,
                "vs_hilbert_conjugate": _CMP,
                "vs_gr_conjugate": _CMP,
            },
        },
    },
    "additionalProperties": False,
}


def algebra_summary(A: ArtinianAlgebra) -> dict:
    return {
        "vars": list(A.ring.names),
        "weights": list(A.ring.weights),
        "field": str(A.field),
        "ideal": [str(g) for g in A.generators],
        "dim": A.dim,
        "hilbert": list(A.hilbert.values),
        "socle": A.socle_degree,
    }


def jordan_report(A: ArtinianAlgebra, ell, with_strings: bool = False) -> JordanReport:
    from .verdicts import is_sl_element

    ell, L = _operator(A, ell)
    ranks = L.power_ranks()
    P = partition_from_ranks(ranks)
    Hc = A.hilbert.conjugate()
    return JordanReport(
        algebra=A,
        element=ell,
        jordan_type=P,
        rank_sequence=ranks[1:],
        hilbert_conjugate=Hc,
        gr_conjugate=A.assoc_graded_hilbert().conjugate(),
        is_sl_element=bool(is_sl_element(A, ell)),
        has_sljt=P == Hc,
        strings=jordan_strings(A, ell) if with_strings else None,
    )
