import jsonschema
import pytest

from conftest import demo
from lefschetz import (
    HypothesisViolation,
    Partition,
    PreconditionViolated,
    centered_check,
    dominance_audit,
    generic_jordan_type_lower_bound,
    has_sljt,
    height_two_sljt_predictor,
    is_sl_element,
    sl_verdict,
    sljt_verdict,
)
from lefschetz.partitions import Dominance
from lefschetz.verdicts import VERDICT_SCHEMA


def test_ex_1_1_verdicts(ex_1_1):
    v = sl_verdict(ex_1_1)
    assert v and v.status == "Yes" and v.jordan_type == Partition((4, 2))
    assert v.recheck(ex_1_1)
    assert str(v) == "Yes(x + y)"
    assert sljt_verdict(ex_1_1)
    assert not is_sl_element(ex_1_1, "x")
    assert is_sl_element(ex_1_1, "x + y")


def test_is_sl_element_reports_failing_map(ex_1_1):
    check = is_sl_element(ex_1_1, "x")
    assert not check.ok and check.failing is not None


def test_ex_2_4_gr_obstruction():
    A = demo("ex_2_4")
    for v in (sl_verdict(A), sljt_verdict(A)):
        assert v.status == "No"
        assert v.tag == "GrDominanceObstruction"
        assert v.certificate["gr_conjugate"] == Partition((3, 1))
    assert generic_jordan_type_lower_bound(A) == {Partition((3, 1))}


def test_ex_3_6_verdicts():
    A = demo("ex_3_6_trimmed")
    assert sl_verdict(A).tag == "NonUnimodalHilbert"
    v = sljt_verdict(A)
    assert v and v.jordan_type == Partition((7, 2))
    assert has_sljt(A, "b + c")


def test_empty_degree_one():
    A = demo("x3_weight2")
    v = sl_verdict(A)
    assert v.status == "No" and v.tag == "EmptyDegreeOne"
    assert has_sljt(A, "x")
    assert sljt_verdict(A)


def test_single_linear_form_decides_without_sampling():
    # A_1 is spanned by x alone, so x is the only candidate up to scaling
    A = demo("height_two_mixed")
    v = sl_verdict(A)
    assert v.status == "No"
    assert v.trials <= 1


def test_probably_no_is_honest():
    with pytest.warns(RuntimeWarning):
        A = demo("mod5")
    v = sl_verdict(A, trials=5, seed=1)
    assert v.status == "ProbablyNo" and v.trials == 5
    assert not v
    assert str(v) == "ProbablyNo(5 trials)"


def test_verdicts_deterministic_and_schema_valid():
    for name in ["ex_1_1", "ex_2_4", "ex_2_5", "ex_3_6_trimmed", "x3_weight2"]:
        A = demo(name)
        for fn in (sl_verdict, sljt_verdict):
            a, b = fn(A, trials=6, seed=42), fn(A, trials=6, seed=42)
            assert a.to_dict() == b.to_dict()
            jsonschema.validate(a.to_dict(), VERDICT_SCHEMA)


def test_trials_must_be_positive(ex_1_1):
    with pytest.raises(PreconditionViolated):
        sl_verdict(ex_1_1, trials=0)


def test_dominance_audit():
    A = demo("ex_2_5")
    a = dominance_audit(A, "x + y + z")
    assert not a.homogeneous
    assert a.vs_hilbert is Dominance.EQUAL and a.vs_gr is Dominance.LESS
    assert not a.counterexample
    b = dominance_audit(A, "x")
    assert b.homogeneous


def test_centered_check(ex_1_1):
    assert centered_check(ex_1_1, "x + y")
    assert not centered_check(ex_1_1, "x")
    with pytest.raises(HypothesisViolation):
        centered_check(ex_1_1, "x + y^2")
    with pytest.raises(HypothesisViolation):
        centered_check(demo("ex_2_11_a"), "x")


@pytest.mark.parametrize(
    "a,b,m,n,divides",
    [(2, 2, 1, 1, True), (3, 6, 2, 1, True), (2, 3, 3, 2, False), (3, 4, 4, 3, False), (2, 4, 2, 1, True),
     (3, 3, 2, 2, True)],
)
def test_height_two_prediction_matches_direct_computation(a, b, m, n, divides):
    pred = height_two_sljt_predictor(a, b, m, n)
    assert pred.divisibility is divides
    assert pred.agrees
    assert bool(pred) is pred.direct


def test_height_two_literal_criterion_disagrees_somewhere():
    pred = height_two_sljt_predictor(3, 6, 2, 1)
    assert pred.direct and not pred.literal


def test_height_two_preconditions():
    with pytest.raises(PreconditionViolated):
        height_two_sljt_predictor(2, 3, 1, 1)
    with pytest.raises(PreconditionViolated):
        height_two_sljt_predictor(4, 2, 1, 2)
