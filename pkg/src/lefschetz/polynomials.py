"""Sparse multivariate polynomials over an exact field with weighted variables.

A polynomial is a mapping from exponent tuples to nonzero scalars.  The ring
fixes the variable names, their positive integer weights, the coefficient
field and the monomial order: weighted degree first, reverse lexicographic on
the variable order to break ties.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Sequence

from .errors import ParseError
from .fields import QQ, FieldSpec, format_scalar

Monomial = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class WeightedRing:
    names: tuple[str, ...]
    weights: tuple[int, ...] = None
    field: FieldSpec = QQ
    _index: dict = dc_field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        weights = tuple(self.weights) if self.weights is not None else (1,) * len(names)
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        if len(weights) != len(names):
            raise ValueError("one weight per variable is required")
        if any(int(w) < 1 for w in weights):
            raise ValueError(f"weights must be positive integers: {weights}")
        for nm in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", nm):
                raise ValueError(f"invalid variable name {nm!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", tuple(int(w) for w in weights))
        object.__setattr__(self, "_index", {nm: i for i, nm in enumerate(names)})

    @property
    def ngens(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def degree(self, mono: Monomial) -> int:
        return sum(e * w for e, w in zip(mono, self.weights))

    def order_key(self, mono: Monomial):
        """Sort key: larger key means larger monomial."""
        return (sum(e * w for e, w in zip(mono, self.weights)), tuple(-e for e in reversed(mono)))

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.ngens: c} if c else {})

    def monomial(self, mono: Sequence[int], c=1) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {tuple(mono): c} if c else {})

    def var(self, v) -> "Polynomial":
        i = v if isinstance(v, int) else self.index(v)
        mono = [0] * self.ngens
        mono[i] = 1
        return Polynomial(self, {tuple(mono): self.field.one})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.ngens)]

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def with_field(self, field: FieldSpec) -> "WeightedRing":
        return WeightedRing(self.names, self.weights, field)

    def __str__(self):
        ws = ",".join(map(str, self.weights))
        return f"{self.field}[{','.join(self.names)}] weights ({ws})"


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: WeightedRing, terms: Mapping[Monomial, object] | None = None):
        self.ring = ring
        f = ring.field
        self.terms = {}
        for m, c in (terms or {}).items():
            c = f(c)
            if c:
                self.terms[tuple(m)] = c

    # -- construction helpers -------------------------------------------------
    def _new(self, terms):
        p = Polynomial.__new__(Polynomial)
        p.ring = self.ring
        p.terms = terms
        return p

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        return self.ring.const(other)

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field(other)
            if not c:
                return self._new({})
            return self._new({m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m)
                terms[m] = c1 * c2 if s is None else s + c1 * c2
        return self._new({m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = self.ring.field(scalar)
        return self * (self.ring.field.one / c)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        return self._new(
            {tuple(a + b for a, b in zip(m, mono)): v * c for m, v in self.terms.items()}
        )

    # -- comparisons ------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure --------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        key = self.ring.order_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        return max(self.terms, key=self.ring.order_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def leading_term(self):
        m = self.leading_monomial()
        return m, self.terms[m]

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self * (self.ring.field.one / self.leading_coefficient())

    def constant_term(self):
        return self.terms.get((0,) * self.ring.ngens, self.ring.field.zero)

    def degrees(self) -> set[int]:
        return {self.ring.degree(m) for m in self.terms}

    def degree(self) -> int:
        """Largest weighted degree of a term (-1 for zero)."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_component(self, d: int) -> "Polynomial":
        return self._new({m: c for m, c in self.terms.items() if self.ring.degree(m) == d})

    def variables(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def substitute(self, images: Sequence["Polynomial"], target: WeightedRing | None = None):
        """Ring map sending variable i to ``images[i]``."""
        if target is None:
            target = images[0].ring if images else self.ring
        out = target.zero()
        cache: dict = {}
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = images[i] ** e
                    term = term * cache[key]
            out = out + term
        return out

    def embed(self, target: WeightedRing, positions: Sequence[int]) -> "Polynomial":
        """Move into ``target`` sending variable i to variable ``positions[i]``."""
        terms = {}
        for m, c in self.terms.items():
            mono = [0] * target.ngens
            for i, e in enumerate(m):
                mono[positions[i]] += e
            terms[tuple(mono)] = target.field(c)
        return Polynomial(target, terms)

    # -- printing -----------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        pieces = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
            )
            s = format_scalar(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            if mono:
                body = mono if s == "1" else f"{s}*{mono}"
            else:
                body = s
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", column=col)
        start = m.start(m.lastindex) + 1
        if m.group(1):
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: WeightedRing):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, column=tok[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def term(self) -> Polynomial:
        p = self.power()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            if op == "*":
                p = p * self.power()
            else:
                tok = self.peek()
                q = self.power()
                if not q.is_zero() and set(q.terms) == {(0,) * self.ring.ngens}:
                    c = q.constant_term()
                    p = p * (self.ring.field.one / c)
                else:
                    self.error("division is only allowed by nonzero constants", tok)
        return p

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a non-negative integer literal", tok)
            base = base ** tok[1]
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, col = tok
        if kind == "num":
            return self.ring.const(val)
        if kind == "name":
            if val not in self.ring._index:
                raise ParseError(f"unknown variable {val!r}", column=col)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                self.error("expected ')'", close)
            return p
        if kind == "op" and val in "+-":
            inner = self.power()
            return -inner if val == "-" else inner
        if kind == "end":
            raise ParseError("unexpected end of input", column=col)
        raise ParseError(f"unexpected token {val!r}", column=col)


def parse_polynomial(text: str, ring: WeightedRing) -> Polynomial:
    """Parse ``+ - * ^`` expressions with integer/rational literals and ring variables."""
    return _Parser(text, ring).parse()


def parse_polynomials(texts: Iterable[str], ring: WeightedRing) -> list[Polynomial]:
    return [parse_polynomial(t, ring) for t in texts]
