"""Elementary symmetric polynomials and rewriting symmetric polynomials in them.

Symmetric polynomials are handled in the monomial-symmetric basis: a dict
from exponent partitions (padded with zeros to length n) to coefficients.
Multiplying by e_k stays inside that basis, so the rewrite never expands a
product of elementary polynomials into all n-variable monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import IndexOutOfRange, NotSymmetric
from .fields import QQ, FieldSpec
from .polynomials import Polynomial, WeightedRing

MBasis = dict  # partition tuple (length n, weakly decreasing) -> coefficient


def x_ring(n: int, field: FieldSpec = QQ, prefix: str = "x") -> WeightedRing:
    return WeightedRing(tuple(f"{prefix}{i}" for i in range(1, n + 1)), (1,) * n, field)


def e_ring(n: int, field: FieldSpec = QQ, prefix: str = "e") -> WeightedRing:
    """Polynomial ring in e_1..e_n with weights 1..n."""
    return WeightedRing(tuple(f"{prefix}{i}" for i in range(1, n + 1)), tuple(range(1, n + 1)), field)


def _check_index(i: int, n: int):
    if n < 0 or not 0 <= i <= n:
        raise IndexOutOfRange(f"elementary symmetric index {i} outside 0..{n}")


def esym(ring: WeightedRing, variables, i: int, power: int = 1) -> Polynomial:
    """e_i of ``x_v^power`` over the variable indices in ``variables``."""
    variables = list(variables)
    _check_index(i, len(variables))
    terms = {}
    for S in combinations(variables, i):
        mono = [0] * ring.ngens
        for v in S:
            mono[v] = power
        terms[tuple(mono)] = 1
    return Polynomial(ring, terms)


def elementary_symmetric(i: int, n: int, ring: WeightedRing | None = None) -> Polynomial:
    ring = ring or x_ring(n)
    return esym(ring, range(n), i)


def e_hat(i: int, n: int, m: int, ring: WeightedRing | None = None) -> Polynomial:
    """``e_i(x_1^m, ..., x_n^m)``."""
    ring = ring or x_ring(n)
    return esym(ring, range(n), i, m)


# -- monomial-symmetric basis -------------------------------------------------------


def _sorted_desc(t) -> tuple[int, ...]:
    return tuple(sorted(t, reverse=True))


def to_mbasis(p: Polynomial, n: int | None = None) -> MBasis:
    """Monomial-symmetric coordinates of ``p``; raises NotSymmetric otherwise."""
    n = p.ring.ngens if n is None else n
    if n != p.ring.ngens:
        raise ValueError("symmetrisation is over all variables of the ring")
    out: MBasis = {}
    for mono, c in p.terms.items():
        key = _sorted_desc(mono)
        other = p.terms.get(key)
        if other is None or other != c:
            raise NotSymmetric(f"{p} is not symmetric: coefficient of {key} differs from that of {mono}")
        out[key] = c
    expected = sum(_orbit_size(mu) for mu in out)
    if expected != len(p.terms):
        raise NotSymmetric(f"{p} is not symmetric: some permuted monomials are missing")
    return out


def _orbit_size(mu) -> int:
    size = 1
    remaining = len(mu)
    for v in set(mu):
        k = mu.count(v)
        size *= comb(remaining, k)
        remaining -= k
    return size


def times_e(f: MBasis, k: int, n: int) -> MBasis:
    """``f · e_k`` in the monomial-symmetric basis."""
    if k == 0:
        return dict(f)
    cands = set()
    for s in f:
        for S in combinations(range(n), k):
            t = list(s)
            for v in S:
                t[v] += 1
            cands.add(_sorted_desc(t))
    out: MBasis = {}
    for t in cands:
        total = 0
        for S in combinations(range(n), k):
            if all(t[v] for v in S):
                u = list(t)
                for v in S:
                    u[v] -= 1
                c = f.get(_sorted_desc(u))
                if c:
                    total = total + c
        if total:
            out[t] = total
    return out


class _EPowers:
    """Memoised monomial-symmetric expansions of e^d = e_1^{d_1} ⋯ e_n^{d_n}."""

    def __init__(self, n: int, one):
        self.n = n
        self.cache: dict[tuple[int, ...], MBasis] = {(0,) * n: {(0,) * n: one}}

    def get(self, d: tuple[int, ...]) -> MBasis:
        hit = self.cache.get(d)
        if hit is not None:
            return hit
        k = max(i for i, e in enumerate(d) if e)
        prev = list(d)
        prev[k] -= 1
        res = times_e(self.get(tuple(prev)), k + 1, self.n)
        self.cache[d] = res
        return res


def rewrite_mbasis(f: MBasis, n: int, one=Fraction(1)) -> dict[tuple[int, ...], object]:
    """Exponent vectors ``d`` and coefficients with ``Σ c·e^d = f``."""
    f = {k: v for k, v in f.items() if v}
    powers = _EPowers(n, one)
    out = {}
    while f:
        mu = max(f)  # lex-largest exponent partition
        c = f[mu]
        d = tuple(mu[i] - (mu[i + 1] if i + 1 < n else 0) for i in range(n))
        out[d] = out.get(d, 0) + c
        for t, v in powers.get(d).items():
            nv = f.get(t, 0) - c * v
            if nv:
                f[t] = nv
            else:
                f.pop(t, None)
    return out


def symmetrize_in_elementary(p: Polynomial, n: int | None = None,
                             target: WeightedRing | None = None) -> Polynomial:
    """The unique q with ``q(e_1, ..., e_n) = p``, as a polynomial in ``target``.

    ``target`` defaults to e1..en with weights 1..n; the result is asserted to
    be homogeneous whenever p is.
    """
    n = p.ring.ngens if n is None else n
    target = target or e_ring(n, p.ring.field)
    coeffs = rewrite_mbasis(to_mbasis(p, n), n, p.ring.field.one)
    q = Polynomial(target, coeffs)
    if p.is_homogeneous() and target.weights == tuple(range(1, n + 1)):
        assert q.is_homogeneous(), f"rewrite of homogeneous {p} is not homogeneous"
    return q


def hat_in_elementary(i: int, n: int, m: int, target: WeightedRing | None = None) -> Polynomial:
    """``e_i(x^m)`` rewritten in e_1..e_n without building the n-variable polynomial."""
    _check_index(i, n)
    field = target.field if target else QQ
    target = target or e_ring(n, field)
    mu = (m,) * i + (0,) * (n - i)
    coeffs = rewrite_mbasis({mu: field.one}, n, field.one)
    return Polynomial(target, coeffs)


@dataclass
class PlethysmReport:
    i: int
    n: int
    lhs: Polynomial  # e_i(x^2) rewritten in e_1..e_n
    rhs: Polynomial  # Σ_k (-1)^k e_k e_{2i-k}
    literal_holds: bool
    holds: bool  # lhs == (-1)^i * rhs

    def __bool__(self):
        return self.holds


def plethysm_p2_identity(i: int, n: int) -> PlethysmReport:
    """Compare ``e_i(x_1^2, ..., x_n^2)`` with ``Σ_{k=0}^{2i} (-1)^k e_k e_{2i-k}``.

    The alternating sum equals ``(-1)^i e_i(x^2)``; both the literal equality
    and the sign-corrected one are reported.
    """
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"need 1 <= i <= n, got i={i}, n={n}")
    R = e_ring(n)
    gens = R.gens()

    def e(k):
        if k == 0:
            return R.one()
        return gens[k - 1] if k <= n else R.zero()

    rhs = R.zero()
    for k in range(0, 2 * i + 1):
        term = e(k) * e(2 * i - k)
        rhs = rhs + term if k % 2 == 0 else rhs - term
    lhs = hat_in_elementary(i, n, 2, R)
    sign = 1 if i % 2 == 0 else -1
    return PlethysmReport(i, n, lhs, rhs, lhs == rhs, lhs == rhs * sign)
