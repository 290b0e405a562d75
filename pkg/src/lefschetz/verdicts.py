"""Strong Lefschetz decisions, dominance bounds and related checks.

Verdicts have three outcomes.  ``Yes`` carries a witness element, ``No``
carries a certificate that can be rechecked, and ``ProbablyNo`` means only
that every sampled element failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, NamedTuple

from .algebra import AlgebraElement, ArtinianAlgebra
from .errors import BoundViolation, HypothesisViolation, NotInMaximalIdeal, PreconditionViolated
from .jordan import jordan_strings, jordan_type
from .linalg import rank
from .partitions import Dominance, HilbertFunction, Partition, dominates, is_symmetric, is_unimodal, leq
from .polynomials import WeightedRing

YES, NO, PROBABLY_NO = "Yes", "No", "ProbablyNo"

EMPTY_DEGREE_ONE = "EmptyDegreeOne"
NON_UNIMODAL = "NonUnimodalHilbert"
GR_DOMINANCE = "GrDominanceObstruction"
RANK_DEFICIT = "RankDeficitAt"

DEFAULT_BOUND = 100


class SLCheck(NamedTuple):
    ok: bool
    failing: tuple[int, int] | None = None

    def __bool__(self):
        return self.ok


def is_sl_element(A: ArtinianAlgebra, ell) -> SLCheck:
    """Maximal rank of every ``×ℓ^k : A_i → A_{i+k}``; needs ℓ linear.

    On failure ``failing`` is the first ``(i, k)`` with a rank deficit, or
    None when ℓ is not a degree-one form.  The result is cross-checked
    against ``jordan_type(ℓ) == H(A)^∨``.
    """
    ell = A.element(ell)
    if not ell.in_maximal_ideal():
        return SLCheck(False, None)
    linear = ell.is_zero() and not A.degree_indices(1) or ell.degree == 1
    if not linear:
        return SLCheck(False, None)
    L = A.mult_operator(ell)
    H = A.hilbert
    j = A.socle_degree
    pieces = A.pieces
    failing = None
    cols = {i: [{b: A.field.one} for b in pieces.get(i, [])] for i in range(j + 1)}
    for k in range(1, j + 1):
        for i in range(0, j + 1 - k):
            cols[i] = [L.apply(c) for c in cols[i]]
            target = min(H.get(i), H.get(i + k))
            if failing is None and rank(cols[i]) != target:
                failing = (i, k)
        if failing:
            break
    result = SLCheck(failing is None, failing)
    agrees = jordan_type(A, ell) == A.hilbert.conjugate()
    if agrees != result.ok:
        raise AssertionError(f"rank test and Jordan type disagree for {ell}")
    return result


def has_sljt(A: ArtinianAlgebra, ell) -> bool:
    return jordan_type(A, ell) == A.hilbert.conjugate()


@dataclass
class LefschetzVerdict:
    kind: str  # "SL" or "SLJT"
    status: str
    witness: AlgebraElement | None = None
    jordan_type: Partition | None = None
    obstruction: str | None = None
    certificate: dict = field(default_factory=dict)
    trials: int = 0

    def __bool__(self):
        return self.status == YES

    @property
    def tag(self) -> str | None:
        if self.obstruction == RANK_DEFICIT:
            i, k = self.certificate["failing"]
            return f"{RANK_DEFICIT}({i},{k})"
        return self.obstruction

    def __str__(self):
        if self.status == YES:
            return f"Yes({self.witness})"
        if self.status == NO:
            return f"No({self.tag})"
        return f"ProbablyNo({self.trials} trials)"

    def recheck(self, A: ArtinianAlgebra) -> bool:
        """Recompute the witness or certificate from scratch."""
        if self.status == YES:
            if self.kind == "SL":
                return bool(is_sl_element(A, self.witness.polynomial))
            return has_sljt(A, self.witness.polynomial)
        if self.status == PROBABLY_NO:
            return True
        ob = self.obstruction
        if ob == EMPTY_DEGREE_ONE:
            return A.hilbert.get(1) == 0 and A.socle_degree > 0
        if ob == NON_UNIMODAL:
            return not is_unimodal(A.hilbert)
        if ob == GR_DOMINANCE:
            return not leq(A.hilbert.conjugate(), A.assoc_graded_hilbert().conjugate())
        if ob == RANK_DEFICIT:
            idx = A.degree_indices(1)
            return len(idx) == 1 and not is_sl_element(A, A.element_from_vector({idx[0]: A.field.one}))
        return False

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"status": self.status}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        if self.jordan_type is not None:
            out["jordan_type"] = list(self.jordan_type.parts)
        if self.obstruction:
            out["obstruction"] = self.tag
        if self.certificate:
            out["certificate"] = {k: _jsonable(v) for k, v in self.certificate.items()}
        out["trials"] = self.trials
        return out


# JSON Schema for ``LefschetzVerdict.to_dict()``.
VERDICT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "LefschetzVerdict",
    "type": "object",
    "required": ["status", "trials"],
    "properties": {
        "status": {"enum": [YES, NO, PROBABLY_NO]},
        "witness": {"type": "string"},
        "jordan_type": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "obstruction": {"type": "string"},
        "certificate": {"type": "object"},
        "trials": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}


def _jsonable(v):
    if isinstance(v, Partition):
        return list(v.parts)
    if isinstance(v, HilbertFunction):
        return list(v.values)
    if isinstance(v, tuple):
        return list(v)
    return v


def _obstructions(A: ArtinianAlgebra, kind: str) -> LefschetzVerdict | None:
    H = A.hilbert
    if kind == "SL":
        if H.get(1) == 0 and A.socle_degree > 0:
            return LefschetzVerdict(kind, NO, obstruction=EMPTY_DEGREE_ONE, certificate={"hilbert": H})
        uni = is_unimodal(H)
        if not uni:
            return LefschetzVerdict(
                kind, NO, obstruction=NON_UNIMODAL, certificate={"hilbert": H, "indices": uni.witness}
            )
    Hc = H.conjugate()
    Gc = A.assoc_graded_hilbert().conjugate()
    if not leq(Hc, Gc):
        return LefschetzVerdict(
            kind, NO, obstruction=GR_DOMINANCE,
            certificate={"hilbert_conjugate": Hc, "gr_conjugate": Gc},
        )
    return None


def trial_rng(seed: int, t: int) -> random.Random:
    """Independent generator for trial ``t``; trial ranges can be split freely."""
    return random.Random(f"{seed}:{t}")


def random_element(A: ArtinianAlgebra, rng: random.Random, indices, bound: int = DEFAULT_BOUND) -> AlgebraElement:
    vec = {}
    for i in indices:
        c = A.field.random(rng, bound)
        if c:
            vec[i] = c
    return A.element_from_vector(vec)


def _degree_one_sum(A: ArtinianAlgebra) -> AlgebraElement:
    return A.element_from_vector({i: A.field.one for i in A.degree_indices(1)})


def _variable_sum(A: ArtinianAlgebra) -> AlgebraElement:
    ring = A.ring
    total = ring.zero()
    for g in ring.gens():
        total = total + g
    return A.element(total)


def sl_verdict(A: ArtinianAlgebra, trials: int = 20, seed: int = 0, bound: int = DEFAULT_BOUND) -> LefschetzVerdict:
    """Search for a strong Lefschetz element after the cheap obstructions.

    Trial 0 is the sum of the degree-one basis monomials; later trials use
    random integer coefficients in ``[-bound, bound]``.
    """
    if trials < 1:
        raise PreconditionViolated("trials must be at least 1")
    found = _obstructions(A, "SL")
    if found is not None:
        return found
    idx = A.degree_indices(1)
    if len(idx) <= 1:
        # every linear form is a multiple of one element: a single test decides
        ell = _degree_one_sum(A)
        check = is_sl_element(A, ell)
        if check:
            return _sl_yes(A, ell, 1)
        return LefschetzVerdict(
            "SL", NO, obstruction=RANK_DEFICIT, certificate={"element": str(ell), "failing": check.failing}, trials=1
        )
    for t in range(trials):
        ell = _degree_one_sum(A) if t == 0 else random_element(A, trial_rng(seed, t), idx, bound)
        if ell.is_zero():
            continue
        if is_sl_element(A, ell):
            return _sl_yes(A, ell, t + 1)
    return LefschetzVerdict("SL", PROBABLY_NO, trials=trials)


def _sl_yes(A, ell, used) -> LefschetzVerdict:
    if not is_unimodal(A.hilbert):
        raise AssertionError("strong Lefschetz element found for a non-unimodal Hilbert function")
    return LefschetzVerdict("SL", YES, witness=ell, jordan_type=jordan_type(A, ell), trials=used)


def sljt_verdict(A: ArtinianAlgebra, trials: int = 20, seed: int = 0, bound: int = DEFAULT_BOUND) -> LefschetzVerdict:
    """Search for an element, homogeneous or not, whose Jordan type is H(A)^∨.

    Trial 0 is the sum of the variables; later trials mix every
    positive-degree basis monomial with random coefficients.
    """
    if trials < 1:
        raise PreconditionViolated("trials must be at least 1")
    found = _obstructions(A, "SLJT")
    if found is not None:
        return found
    target = A.hilbert.conjugate()
    idx = A.homogeneous_positive_basis()
    for t in range(trials):
        ell = _variable_sum(A) if t == 0 else random_element(A, trial_rng(seed, t), idx, bound)
        P = jordan_type(A, ell)
        if P == target:
            return LefschetzVerdict("SLJT", YES, witness=ell, jordan_type=P, trials=t + 1)
    return LefschetzVerdict("SLJT", PROBABLY_NO, trials=trials)


def generic_jordan_type_lower_bound(A: ArtinianAlgebra, trials: int = 10, seed: int = 0,
                                    bound: int = DEFAULT_BOUND) -> set[Partition]:
    """Dominance-maximal Jordan types among random elements of the maximal ideal.

    Only a lower bound: the true generic type dominates everything returned.
    """
    if trials < 1:
        raise PreconditionViolated("trials must be at least 1")
    idx = A.homogeneous_positive_basis()
    seen = {jordan_type(A, random_element(A, trial_rng(seed, t), idx, bound)) for t in range(trials)}
    return {
        P for P in seen
        if not any(Q != P and dominates(Q, P) is Dominance.GREATER for Q in seen)
    }


@dataclass
class DominanceAudit:
    element: str
    homogeneous: bool
    jordan_type: Partition
    hilbert_conjugate: Partition
    gr_conjugate: Partition
    vs_hilbert: Dominance
    vs_gr: Dominance
    counterexample: bool = False


def dominance_audit(A: ArtinianAlgebra, ell) -> DominanceAudit:
    """Check ``P_ℓ ≤ H(Gr)^∨`` always and ``P_ℓ ≤ H(A)^∨`` for homogeneous ℓ.

    A non-homogeneous element beating ``H(A)^∨`` sets ``counterexample``
    instead of raising, since no such element is known.
    """
    ell = A.element(ell)
    if not ell.in_maximal_ideal():
        raise NotInMaximalIdeal(f"{ell} has a nonzero constant term")
    P = jordan_type(A, ell)
    Hc = A.hilbert.conjugate()
    Gc = A.assoc_graded_hilbert().conjugate()
    audit = DominanceAudit(
        str(ell), ell.is_homogeneous(), P, Hc, Gc, dominates(P, Hc), dominates(P, Gc)
    )
    if not leq(P, Gc):
        raise BoundViolation(f"Jordan type {P} of {ell} exceeds H(Gr)^∨ = {Gc}")
    if not leq(P, Hc):
        if audit.homogeneous:
            raise BoundViolation(f"Jordan type {P} of homogeneous {ell} exceeds H(A)^∨ = {Hc}")
        audit.counterexample = True
    return audit


def centered_check(A: ArtinianAlgebra, ell) -> bool:
    """For symmetric H(A) and linear ℓ: every string satisfies ``2a + p - 1 = j``.

    The outcome is cross-checked against :func:`is_sl_element`.
    """
    if not is_symmetric(A.hilbert):
        raise HypothesisViolation(f"Hilbert function {A.hilbert} is not symmetric")
    ell = A.element(ell)
    if ell.degree != 1:
        raise HypothesisViolation(f"{ell} is not a nonzero linear form")
    j = A.socle_degree
    centered = all(2 * s.degree + s.length - 1 == j for s in jordan_strings(A, ell))
    if centered != bool(is_sl_element(A, ell)):
        raise AssertionError(f"centered strings and strong Lefschetz test disagree for {ell}")
    return centered


@dataclass
class HeightTwoPrediction:
    """Conjugate comparison for ``k[x,y]/(x^a - y^b, xy)`` with weights ``(m, n)``."""

    a: int
    b: int
    m: int
    n: int
    literal: bool  # "n | m and (a-1)m = bn" read verbatim
    divisibility: bool  # "n | m" alone
    direct: bool  # H(A)^∨ == H(Gr)^∨ by computation
    hilbert: HilbertFunction
    gr_hilbert: HilbertFunction

    @property
    def predicted(self) -> bool:
        return self.divisibility

    @property
    def literal_agrees(self) -> bool:
        return self.literal == self.direct

    @property
    def agrees(self) -> bool:
        return self.predicted == self.direct

    def __bool__(self):
        return self.predicted


def height_two_sljt_predictor(a: int, b: int, m: int, n: int) -> HeightTwoPrediction:
    if min(a, b, m, n) < 1:
        raise PreconditionViolated("a, b, m, n must be positive")
    if a * m != b * n:
        raise PreconditionViolated(f"a*m = {a * m} differs from b*n = {b * n}")
    if a > b:
        raise PreconditionViolated(f"need a <= b, got a={a}, b={b}")
    R = WeightedRing(("x", "y"), (m, n))
    x, y = R.gens()
    A = ArtinianAlgebra(R, [x ** a - y ** b, x * y])
    G = A.assoc_graded_hilbert()
    direct = A.hilbert.conjugate() == G.conjugate()
    divides = m % n == 0
    return HeightTwoPrediction(
        a, b, m, n,
        literal=divides and (a - 1) * m == b * n,
        divisibility=divides,
        direct=direct,
        hilbert=A.hilbert,
        gr_hilbert=G,
    )
