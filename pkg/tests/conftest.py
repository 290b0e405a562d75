from pathlib import Path

import pytest
import sympy
from hypothesis import HealthCheck, settings

from lefschetz import ArtinianAlgebra, WeightedRing, load_presentation

ROOT = Path(__file__).resolve().parent.parent
DEMOS = ROOT / "demos" / "presentations"

settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    max_examples=200,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repro")


def demo(name: str) -> ArtinianAlgebra:
    return load_presentation(DEMOS / f"{name}.alg").algebra()


def algebra(names, ideal, weights=None, char=0):
    from lefschetz import FieldSpec

    ring = WeightedRing(tuple(names.split(",")) if isinstance(names, str) else tuple(names), weights, FieldSpec(char))
    return ArtinianAlgebra(ring, ideal)


def to_sympy(p, symbols=None):
    """Independent re-expression of a Polynomial as a sympy expression."""
    syms = symbols or sympy.symbols(p.ring.names)
    expr = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, mono):
            term *= s**e
        expr += term
    return sympy.expand(expr)


def sympy_matrix(linear_map):
    return sympy.Matrix([[sympy.Rational(c) for c in row] for row in linear_map.to_dense()])


@pytest.fixture
def ex_1_1():
    return demo("ex_1_1")


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
