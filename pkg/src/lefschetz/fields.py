"""Exact coefficient fields: the rationals and prime fields GF(p).

Rationals are plain :class:`fractions.Fraction` objects.  Prime-field scalars
are :class:`ModP` instances that support the same operators, so every
algorithm downstream is written once against ``+ - * /``.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction


class ModP:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return ModP(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def signed(self) -> int:
        """Representative in (-p/2, p/2]."""
        return self.v - self.p if self.v > self.p // 2 else self.v

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.signed())


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class FieldSpec:
    """Characteristic 0 (the rationals) or a prime ``p``."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or prime, got {c}")

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        """Coerce an int, Fraction, ModP or numeric string into the field."""
        if isinstance(value, str):
            m = _RATIONAL.match(value)
            if not m:
                raise ValueError(f"not a rational literal: {value!r}")
            num, den = int(m.group(1)), int(m.group(2) or 1)
            value = Fraction(num, den)
        p = self.characteristic
        if p == 0:
            if isinstance(value, ModP):
                raise TypeError("cannot lift a prime-field element to Q")
            return Fraction(value)
        if isinstance(value, ModP):
            if value.p != p:
                raise ValueError(f"GF({value.p}) element used in GF({p})")
            return value
        value = Fraction(value)
        if value.denominator % p == 0:
            raise ZeroDivisionError(f"denominator {value.denominator} vanishes in GF({p})")
        return ModP(value.numerator * pow(value.denominator, -1, p), p)

    def random(self, rng, bound: int = 100, nonzero: bool = False):
        while True:
            c = self(rng.randint(-bound, bound))
            if c or not nonzero:
                return c

    def characteristic_too_small(self, bound: int) -> bool:
        """True when ``0 < char <= bound``; used for the char > socle-degree hypotheses."""
        return self.characteristic != 0 and self.characteristic <= bound

    def warn_if_small(self, bound: int, what: str = "socle degree") -> bool:
        if self.characteristic_too_small(bound):
            warnings.warn(
                f"characteristic {self.characteristic} does not exceed the {what} {bound}; "
                "Lefschetz results assuming large characteristic may not apply",
                RuntimeWarning,
                stacklevel=3,
            )
            return True
        return False

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)


def format_scalar(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)
