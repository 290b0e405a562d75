"""Reading algebra presentations from ``.alg`` text files.

A file is a list of ``key: value`` lines; ``#`` starts a comment and a line
without a key continues the previous block.  Keys:

    name:          free-form label
    ring:          x, y, z            (comma separated variable names)
    weights:       1, 1, 2            (optional, default all 1)
    char:          0                  (optional, 0 or a prime)
    ideal:         x*z - y^3; y*z     (semicolon separated, may be empty)

Extension files add ``fiber:`` and ``iota:`` blocks (polynomials in the same
ring) and optionally describe the base with ``base_ring:``,
``base_weights:`` and ``base_ideal:``.  A single polynomial must fit on one
line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import ArtinianAlgebra
from .errors import ParseError
from .extensions import ExtensionSpec
from .fields import FieldSpec
from .polynomials import Polynomial, WeightedRing, parse_polynomial

KEYS = ("name", "ring", "weights", "char", "ideal", "fiber", "iota", "base_ring", "base_weights", "base_ideal")
_KEY_LINE = re.compile(r"^(\s*)([A-Za-z_]+)\s*:")


@dataclass
class _Item:
    text: str
    line: int
    column: int  # 1-based column of the first character of ``text``


@dataclass
class Presentation:
    ring: WeightedRing
    ideal: list[Polynomial]
    name: str | None = None
    fiber: list[Polynomial] | None = None
    iota: list[Polynomial] | None = None
    base_ring: WeightedRing | None = None
    base_ideal: list[Polynomial] | None = None
    source: str | None = field(default=None, repr=False)

    @property
    def is_extension(self) -> bool:
        return self.fiber is not None or self.iota is not None

    def algebra(self) -> ArtinianAlgebra:
        return ArtinianAlgebra(self.ring, self.ideal, name=self.name)

    def base_algebra(self) -> ArtinianAlgebra | None:
        if self.base_ring is None:
            return None
        return ArtinianAlgebra(self.base_ring, self.base_ideal or [], name=f"{self.name or 'A'} base")

    def extension_spec(self) -> ExtensionSpec:
        if not self.is_extension:
            raise ParseError("not an extension file: 'fiber:' and 'iota:' blocks are required")
        return ExtensionSpec(self.algebra(), self.fiber or [], self.iota or [], self.base_algebra())


def _split(items: list[_Item], sep: str) -> list[_Item]:
    out = []
    for it in items:
        pos = 0
        for piece in it.text.split(sep):
            stripped = piece.strip()
            if stripped:
                lead = len(piece) - len(piece.lstrip())
                out.append(_Item(stripped, it.line, it.column + pos + lead))
            pos += len(piece) + 1
    return out


def _blocks(text: str) -> dict[str, list[_Item]]:
    blocks: dict[str, list[_Item]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _KEY_LINE.match(line)
        if m:
            key = m.group(2).lower()
            if key not in KEYS:
                raise ParseError(f"unknown key {m.group(2)!r}", line=lineno, column=len(m.group(1)) + 1)
            if key in blocks:
                raise ParseError(f"duplicate key {key!r}", line=lineno, column=len(m.group(1)) + 1)
            current = key
            blocks[key] = []
            rest = line[m.end():]
            blocks[key].append(_Item(rest, lineno, m.end() + 1))
        else:
            if current is None:
                col = len(line) - len(line.lstrip()) + 1
                raise ParseError("expected 'key: value'", line=lineno, column=col)
            blocks[current].append(_Item(line, lineno, 1))
    return blocks


def _ints(items: list[_Item], what: str) -> list[int]:
    out = []
    for it in _split(items, ","):
        try:
            out.append(int(it.text))
        except ValueError:
            raise ParseError(f"{what} must be integers, got {it.text!r}", it.line, it.column) from None
    return out


def _ring(blocks, prefix: str, fld: FieldSpec, required: bool) -> WeightedRing | None:
    key = prefix + "ring"
    if key not in blocks:
        if required:
            raise ParseError(f"missing '{key}:' line", line=1, column=1)
        return None
    names = _split(blocks[key], ",")
    weights = _ints(blocks.get(prefix + "weights", []), "weights") if prefix + "weights" in blocks else None
    anchor = blocks[key][0]
    try:
        return WeightedRing(tuple(n.text for n in names), tuple(weights) if weights is not None else None, fld)
    except ValueError as exc:
        raise ParseError(str(exc), anchor.line, anchor.column) from None


def _polys(items: list[_Item], ring: WeightedRing) -> list[Polynomial]:
    out = []
    for it in _split(items, ";"):
        try:
            out.append(parse_polynomial(it.text, ring))
        except ParseError as exc:
            col = it.column + (exc.column - 1 if exc.column else 0)
            raise ParseError(exc.detail, it.line, col) from None
    return out


def parse_presentation(text: str, source: str | None = None) -> Presentation:
    blocks = _blocks(text)
    fld = FieldSpec(0)
    if "char" in blocks:
        it = blocks["char"][0]
        values = _ints(blocks["char"], "char")
        if len(values) != 1:
            raise ParseError("char takes exactly one integer", it.line, it.column)
        try:
            fld = FieldSpec(values[0])
        except ValueError as exc:
            raise ParseError(str(exc), it.line, it.column) from None
    ring = _ring(blocks, "", fld, required=True)
    ideal = _polys(blocks.get("ideal", []), ring)
    name = " ".join(it.text.strip() for it in blocks.get("name", [])) or None
    pres = Presentation(ring, ideal, name=name, source=source)
    if "fiber" in blocks or "iota" in blocks:
        pres.fiber = _polys(blocks.get("fiber", []), ring)
        pres.iota = _polys(blocks.get("iota", []), ring)
    base = _ring(blocks, "base_", fld, required=False)
    if base is not None:
        pres.base_ring = base
        pres.base_ideal = _polys(blocks.get("base_ideal", []), base)
    elif "base_ideal" in blocks or "base_weights" in blocks:
        it = (blocks.get("base_ideal") or blocks["base_weights"])[0]
        raise ParseError("base blocks need a 'base_ring:' line", it.line, 1)
    return pres


def load_presentation(path) -> Presentation:
    path = Path(path)
    return parse_presentation(path.read_text(), source=str(path))


def format_presentation(A: ArtinianAlgebra, name: str | None = None) -> str:
    """Inverse of :func:`parse_presentation` for a plain algebra."""
    lines = []
    if name or A.name:
        lines.append(f"name: {name or A.name}")
    lines.append(f"ring: {', '.join(A.ring.names)}")
    lines.append(f"weights: {', '.join(map(str, A.ring.weights))}")
    lines.append(f"char: {A.field.characteristic}")
    lines.append(f"ideal: {'; '.join(str(g) for g in A.generators)}")
    return "\n".join(lines) + "\n"
