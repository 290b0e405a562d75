import pytest

from conftest import algebra, demo
from lefschetz import (
    ArtinianAlgebra,
    HilbertFunction,
    NotArtinian,
    NotConnected,
    NotHomogeneous,
    NotInMaximalIdeal,
    WeightedRing,
    assoc_graded_hilbert,
    trim_presentation,
)


def test_basic_invariants_of_ex_1_1(ex_1_1):
    A = ex_1_1
    assert A.dim == 6
    assert A.hilbert == HilbertFunction((1, 2, 2, 1))
    assert A.socle_degree == 3
    assert [len(A.degree_indices(d)) for d in range(4)] == [1, 2, 2, 1]
    assert A.is_standard_graded()


def test_construction_errors():
    with pytest.raises(NotHomogeneous):
        algebra("x,y", ["x^2 + y", "y^3"])
    with pytest.raises(NotConnected):
        algebra("x", ["x^2", "1"])
    with pytest.raises(NotArtinian):
        algebra("x,y", ["x^2"])
    with pytest.raises(NotArtinian):
        algebra("x", [])


def test_inhomogeneous_for_standard_weights_but_homogeneous_for_weights():
    A = algebra("x,y,z", ["x*z - y^3", "y*z", "z^2", "x^4*y", "x^5"], weights=(1, 1, 2))
    assert A.hilbert.values == (1, 2, 4, 4, 4, 2, 1)
    with pytest.raises(NotHomogeneous):
        algebra("x,y,z", ["x*z - y^3", "y*z", "z^2", "x^4*y", "x^5"])


def test_multiplication_respects_relations(ex_1_1):
    A = ex_1_1
    x, y = A.variable("x"), A.variable("y")
    assert (x * x).is_zero()
    assert (y * y * y).is_zero()
    assert not (x * y * y).is_zero()
    assert A.element("x*y^2") == x * y * y
    assert A.element("x^2 + y") == y
    assert (x + y).degree == 1
    assert A.element("x + y^2").degree is None
    assert A.element(0).is_zero()


def test_mult_operator_rejects_units(ex_1_1):
    with pytest.raises(NotInMaximalIdeal):
        ex_1_1.mult_operator(ex_1_1.element("1 + x"))


def test_element_vector_roundtrip():
    A = demo("ex_2_5")
    for text in ["x + y + z", "3*x^2*y - z", "y^3", "x^4"]:
        e = A.element(text)
        assert A.element_from_vector(e.vector) == e
        assert A.element(A.to_polynomial(e.vector)) == e


def test_ex_2_5_relation_xz_equals_y_cubed():
    A = demo("ex_2_5")
    assert A.element("x*z") == A.element("y^3")
    assert not A.element("y^3").is_zero()


def test_assoc_graded_hilbert():
    assert assoc_graded_hilbert(demo("ex_2_4")).values == (1, 2, 1)
    assert assoc_graded_hilbert(demo("ex_2_5")).values == (1, 3, 3, 4, 4, 2, 1)
    assert assoc_graded_hilbert(demo("x3_weight2")).values == (1, 1, 1)
    assert assoc_graded_hilbert(demo("ex_2_11_b")).values == (1, 2, 1, 1)
    # Gr(B) written out explicitly has the same Hilbert function
    assert demo("gr_2_5").hilbert == assoc_graded_hilbert(demo("ex_2_5"))


def test_maximal_ideal_powers_shrink_to_zero():
    A = demo("ex_3_6_trimmed")
    dims = A.maximal_ideal_powers()
    assert dims[0] == A.dim
    assert dims == sorted(dims, reverse=True)
    assert dims[-1] == 0


def test_trim_presentation_eliminates_linear_variable():
    R = WeightedRing(("a", "b", "c"), (3, 2, 1))
    ring, gens, eliminated = trim_presentation(R, ["a + c^3", "b^3 + a*c^3", "b*c"])
    assert ring.names == ("b", "c")
    assert ring.weights == (2, 1)
    assert {str(g) for g in gens} == {str(ring.parse("b^3 - c^6")), str(ring.parse("b*c"))}
    assert "a" in {str(k) for k in eliminated}
    trimmed = ArtinianAlgebra(ring, gens)
    assert trimmed.hilbert == demo("ex_3_6").hilbert


def test_positive_characteristic_warning():
    with pytest.warns(RuntimeWarning):
        algebra("x,y", ["x^5", "y^5"], char=5)


def test_homogeneous_positive_basis_excludes_constants(ex_1_1):
    idx = ex_1_1.homogeneous_positive_basis()
    assert len(idx) == ex_1_1.dim - 1
    assert all(ex_1_1.degrees[i] > 0 for i in idx)
