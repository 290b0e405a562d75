import pytest
import sympy
from sympy.utilities.iterables import partitions as sympy_partitions

from lefschetz import (
    Dominance,
    HilbertFunction,
    MismatchedWeight,
    Partition,
    ParseError,
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


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))
    assert Partition.from_parts([0, 2, 5, 2]) == Partition((5, 2, 2))
    assert Partition.parse("(4,2)") == Partition((4, 2))
    assert Partition.parse("") == Partition(())
    with pytest.raises(ParseError):
        Partition.parse("4,x")


def test_conjugate_of_hilbert_function():
    assert HilbertFunction((1, 2, 2, 1)).conjugate() == Partition((4, 2))
    assert HilbertFunction((1, 2, 4, 4, 4, 2, 1)).conjugate() == Partition((7, 5, 3, 3))
    assert HilbertFunction((1, 3, 3, 4, 4, 2, 1)).conjugate() == Partition((7, 5, 4, 2))
    assert HilbertFunction((1, 0, 1, 0, 1)).conjugate() == Partition((3,))
    assert conjugate(()) == Partition(())


def test_conjugate_is_involution_on_all_partitions_of_12():
    for P in partitions_of(12):
        assert conjugate(conjugate(P)) == P


def test_partitions_of_count_matches_sympy():
    for n in range(0, 16):
        ours = list(partitions_of(n))
        assert len(ours) == sympy.functions.combinatorial.numbers.partition(n)
        assert len(set(ours)) == len(ours)
        theirs = {Partition.from_parts([k for k, v in d.items() for _ in range(v)]) for d in sympy_partitions(n)}
        assert set(ours) == theirs


def test_dominance_examples():
    assert dominates((3, 1), (4,)) is Dominance.LESS
    assert dominates((7, 5, 3, 3), (7, 5, 4, 2)) is Dominance.LESS
    assert dominates((4, 2), (4, 2)) is Dominance.EQUAL
    assert dominates((3, 3), (4, 2)) is Dominance.LESS
    assert dominates((3, 3), (4, 1, 1)) is Dominance.INCOMPARABLE
    assert dominates((3, 1, 1, 1), (2, 2, 2)) is Dominance.INCOMPARABLE
    assert leq((2, 2, 2), (4, 2))
    assert not leq((4, 2), (2, 2, 2))
    with pytest.raises(MismatchedWeight):
        dominates((3,), (2,))


def test_dominance_reverses_under_conjugation():
    for n in (6, 7, 8):
        parts = list(partitions_of(n))
        for P in parts:
            for Q in parts:
                d = dominates(P, Q)
                flipped = {Dominance.LESS: Dominance.GREATER, Dominance.GREATER: Dominance.LESS}.get(d, d)
                assert dominates(conjugate(P), conjugate(Q)) is flipped


def test_clebsch_gordan():
    assert clebsch_gordan(2, 3) == Partition((4, 2))
    assert clebsch_gordan(4, 4) == Partition((7, 5, 3, 1))
    assert clebsch_gordan(4, 1) == Partition((4,))
    assert clebsch_gordan(1, 1) == Partition((1,))
    with pytest.raises(ValueError):
        clebsch_gordan(0, 3)


def test_tensor_jordan_type_watanabe():
    P = tensor_jordan_type((4, 1), (4, 1))
    assert P == Partition((7, 5, 4, 4, 3, 1, 1))
    assert P.n == 25


def test_hilbert_tensor():
    assert hilbert_tensor((1, 2, 1, 1), (1, 1, 2, 1)) == HilbertFunction((1, 3, 5, 7, 5, 3, 1))
    assert hilbert_tensor((1, 1, 2, 1, 2, 1, 1), (1, 2, 2, 1)) == HilbertFunction((1, 3, 6, 8, 9, 9, 8, 6, 3, 1))
    assert hilbert_tensor((), (1, 2)) == HilbertFunction(())


def test_hilbert_function_trims_trailing_zeros_keeps_internal():
    H = HilbertFunction((1, 0, 1, 0, 0))
    assert H.values == (1, 0, 1)
    assert H.socle_degree == 2
    assert H.total == 2
    assert H.get(7) == 0
    with pytest.raises(ValueError):
        HilbertFunction((1, -1))
    assert HilbertFunction.parse("(1,2,1)") == HilbertFunction((1, 2, 1))


def test_unimodality_witness():
    assert is_unimodal((1, 2, 2, 1))
    assert is_unimodal((1, 1, 1))
    u = is_unimodal((1, 1, 2, 1, 2, 1, 1))
    assert not u and u.witness == (2, 3, 4)
    assert not is_unimodal((1, 0, 1))
    assert is_symmetric((1, 2, 1)) and not is_symmetric((1, 2, 2))
