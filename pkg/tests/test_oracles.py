"""Jordan types recomputed from scratch with sympy: its own Groebner basis,
its own normal forms and its own matrix ranks."""

import itertools

import pytest
import sympy

from conftest import demo
from lefschetz import Partition, jordan_type


def sympy_jordan_type(names, ideal, element, max_exp=12):
    syms = sympy.symbols(names)
    G = sympy.groebner([sympy.sympify(g, locals=dict(zip(names, syms))) for g in ideal], *syms,
                       order="grevlex", domain=sympy.QQ)
    leads = [sympy.Poly(g, *syms).monoms(order="grevlex")[0] for g in G.exprs]
    standard = [
        e for e in itertools.product(range(max_exp), repeat=len(syms))
        if not any(all(a >= b for a, b in zip(e, lm)) for lm in leads)
    ]
    index = {e: i for i, e in enumerate(standard)}
    ell = sympy.sympify(element, locals=dict(zip(names, syms)))
    n = len(standard)
    M = sympy.zeros(n, n)
    for j, e in enumerate(standard):
        mono = sympy.Mul(*[s**k for s, k in zip(syms, e)])
        _, rem = G.reduce(sympy.expand(ell * mono))
        for m, c in sympy.Poly(rem, *syms).terms():
            M[index[m], j] = c
    ranks = [n]
    P = sympy.eye(n)
    while ranks[-1]:
        P = P * M
        ranks.append(P.rank())
    counts = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts = []
    for k in range(len(counts)):
        ge_k = counts[k]
        ge_next = counts[k + 1] if k + 1 < len(counts) else 0
        parts += [k + 1] * (ge_k - ge_next)
    return Partition.from_parts(parts), n


CASES = [
    ("ex_1_1", ("x", "y"), ["x**2", "y**3"], "x", (2, 2, 2)),
    ("ex_1_1", ("x", "y"), ["x**2", "y**3"], "x + y", (4, 2)),
    ("ex_2_4", ("x", "y"), ["x**2", "y**2"], "x + y", (3, 1)),
    ("ex_2_5", ("x", "y", "z"), ["x*z - y**3", "y*z", "z**2", "x**4*y", "x**5"], "x + y + z", (7, 5, 3, 3)),
    ("ex_2_5", ("x", "y", "z"), ["x*z - y**3", "y*z", "z**2", "x**4*y", "x**5"], "x + y", (7, 5, 3, 3)),
    ("ex_3_6_trimmed", ("b", "c"), ["b**3 - c**6", "b*c"], "b + c", (7, 2)),
    ("ex_2_18_base", ("z1", "z2"), ["z1**3 - 3*z1*z2", "z2**3"], "z1 + z2", (7, 2)),
]


@pytest.mark.parametrize("name,names,ideal,element,expected", CASES)
def test_jordan_type_matches_sympy(name, names, ideal, element, expected):
    oracle, dim = sympy_jordan_type(names, ideal, element)
    A = demo(name)
    assert A.dim == dim
    assert oracle == Partition(expected)  # frozen after the oracle computed it
    assert jordan_type(A, element.replace("**", "^")) == oracle


def test_linear_element_of_ex_2_5_reaches_hilbert_conjugate():
    # x + y is homogeneous of degree one and already attains H(B)^∨,
    # so B does have a linear SLJT element
    A = demo("ex_2_5")
    P, _ = sympy_jordan_type(("x", "y", "z"), ["x*z - y**3", "y*z", "z**2", "x**4*y", "x**5"], "x + y")
    assert P == A.hilbert.conjugate() == Partition((7, 5, 3, 3))
