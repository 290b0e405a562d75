"""Exact computation of Jordan types and Lefschetz properties of graded Artinian algebras."""

__version__ = "0.1.0"

from .errors import (
    BoundViolation,
    HypothesisViolation,
    IndexOutOfRange,
    LefschetzError,
    MismatchedWeight,
    NotArtinian,
    NotConnected,
    NotHomogeneous,
    NotInMaximalIdeal,
    NotSymmetric,
    ParseError,
    PreconditionViolated,
    PresentationMismatch,
    ResourceCapExceeded,
    UnsupportedPair,
)
from .fields import QQ, FieldSpec
from .partitions import (
    Dominance,
    HilbertFunction,
    Partition,
    clebsch_gordan,
    conjugate,
    dominates,
    hilbert_tensor,
    is_symmetric,
    is_unimodal,
    leq,
    partitions_of,
    tensor_jordan_type,
)
from .polynomials import Polynomial, WeightedRing, parse_polynomial
from .groebner import GroebnerBasis, buchberger, hilbert_function, normal_form
from .algebra import AlgebraElement, ArtinianAlgebra, assoc_graded_hilbert, build_algebra, trim_presentation
from .jordan import JordanReport, JordanString, jordan_report, jordan_strings, jordan_type, rank_sequence
from .verdicts import (
    LefschetzVerdict,
    centered_check,
    dominance_audit,
    generic_jordan_type_lower_bound,
    has_sljt,
    height_two_sljt_predictor,
    is_sl_element,
    sl_verdict,
    sljt_verdict,
)
from .extensions import (
    ExtensionSpec,
    FreeExtensionReport,
    tensor_algebra,
    tensor_lefschetz_report,
    tensor_product,
    verify_free_extension,
)
from .symmetric import (
    e_hat,
    elementary_symmetric,
    hat_in_elementary,
    plethysm_p2_identity,
    symmetrize_in_elementary,
)
from .coinvariants import (
    GroupSpec,
    RelativePair,
    almkvist_scan,
    coinvariant_ring,
    gr_conjugate_scan,
    hilbert_poly_closed,
    relative_coinvariant,
    relative_extension,
    restricted_partition_count,
)
from .presentation import Presentation, format_presentation, load_presentation, parse_presentation
