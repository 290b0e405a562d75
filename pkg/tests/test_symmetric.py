import random

import pytest
import sympy
from sympy.polys.polyfuncs import symmetrize

from conftest import to_sympy
from lefschetz import (
    IndexOutOfRange,
    NotSymmetric,
    e_hat,
    elementary_symmetric,
    hat_in_elementary,
    plethysm_p2_identity,
    symmetrize_in_elementary,
)
from lefschetz.symmetric import e_ring, to_mbasis, x_ring


def sympy_in_elementary(expr, n):
    """Rewrite a symmetric expression in x1..xn through sympy's own algorithm."""
    xs = sympy.symbols(f"x1:{n + 1}")
    es = sympy.symbols(f"e1:{n + 1}")
    sym, rem, defs = symmetrize(expr, *xs, formal=True)
    assert rem == 0
    return sympy.expand(sym.subs({s: e for (s, _), e in zip(defs, es)}))


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("m", [2, 3])
def test_hat_in_elementary_matches_sympy(n, m):
    xs = sympy.symbols(f"x1:{n + 1}")
    for i in range(1, n + 1):
        hat = to_sympy(e_hat(i, n, m))
        expected = sympy_in_elementary(hat, n)
        assert to_sympy(hat_in_elementary(i, n, m)) == expected
        # the rewritten relation is homogeneous for weights 1..n
        assert hat_in_elementary(i, n, m).is_homogeneous()
        assert hat.free_symbols <= set(xs)


def test_relations_for_three_variables_cubed():
    R = e_ring(3)
    assert hat_in_elementary(1, 3, 3) == R.parse("e1^3 - 3*e1*e2 + 3*e3")
    assert hat_in_elementary(2, 3, 3) == R.parse("e2^3 - 3*e1*e2*e3 + 3*e3^2")
    assert hat_in_elementary(3, 3, 3) == R.parse("e3^3")


def test_symmetrize_random_symmetric_polynomials():
    rng = random.Random(9)
    n = 3
    X = x_ring(n)
    for _ in range(10):
        p = X.zero()
        for _ in range(3):
            k = rng.randint(1, n)
            p = p + elementary_symmetric(k, n, X) ** rng.randint(1, 3) * rng.randint(-4, 4)
        q = symmetrize_in_elementary(p)
        assert to_sympy(q) == sympy_in_elementary(to_sympy(p), n)
        # substituting back recovers p
        images = [elementary_symmetric(k, n, X) for k in range(1, n + 1)]
        assert q.substitute(images, X) == p


def test_not_symmetric_is_rejected():
    X = x_ring(3)
    with pytest.raises(NotSymmetric):
        to_mbasis(X.parse("x1^2 + x2^2"))
    with pytest.raises(NotSymmetric):
        to_mbasis(X.parse("x1*x2 + 2*x1*x3 + x2*x3"))


def test_index_range():
    with pytest.raises(IndexOutOfRange):
        elementary_symmetric(4, 3)
    assert elementary_symmetric(0, 3) == x_ring(3).one()
    with pytest.raises(IndexOutOfRange):
        plethysm_p2_identity(0, 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_plethysm_identity_holds_up_to_sign(n):
    es = sympy.symbols(f"e1:{n + 1}")
    for i in range(1, n + 1):
        rep = plethysm_p2_identity(i, n)
        assert rep.holds
        assert rep.literal_holds == (i % 2 == 0)
        # independent check of the alternating sum
        e = lambda k: 1 if k == 0 else (es[k - 1] if k <= n else 0)
        alt = sympy.expand(sum((-1) ** k * e(k) * e(2 * i - k) for k in range(2 * i + 1)))
        assert to_sympy(rep.rhs) == alt
        assert to_sympy(rep.lhs) == sympy.expand((-1) ** i * alt)
