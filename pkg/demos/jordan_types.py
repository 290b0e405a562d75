"""Jordan types, strings and the two dominance bounds on small algebras.

Run with ``python3 demos/jordan_types.py``.
"""

from pathlib import Path

from lefschetz import (
    dominance_audit,
    jordan_report,
    load_presentation,
    sl_verdict,
    sljt_verdict,
)

HERE = Path(__file__).resolve().parent / "presentations"


def load(name):
    return load_presentation(HERE / f"{name}.alg").algebra()


def show(A, ell, strings=False):
    rep = jordan_report(A, ell, with_strings=strings)
    print(f"  P_{{{rep.element}}} = ({rep.jordan_type})   ranks {rep.rank_sequence}")
    for s in rep.strings or []:
        print(f"    string of length {s.length} from {s.generator}")


A = load("ex_1_1")
print(f"{A!r}\n  H^v = ({A.hilbert.conjugate()})")
show(A, "x", strings=True)
show(A, "x + y", strings=True)
print("  SL:", sl_verdict(A))

# With weights (1,2) the Hilbert function is flat, but the associated graded
# algebra is standard graded and forces a smaller generic Jordan type.
A = load("ex_2_4")
print(f"\n{A!r}\n  H(Gr) = {A.assoc_graded_hilbert()}")
show(A, "x + y")
print("  SL:  ", sl_verdict(A))
print("  SLJT:", sljt_verdict(A))

# Here the non-homogeneous x+y+z attains H^v; so does the linear form x+y.
B = load("ex_2_5")
print(f"\n{B!r}\n  H(Gr) = {B.assoc_graded_hilbert()}")
for ell in ("x + y + z", "x + y", "x"):
    a = dominance_audit(B, ell)
    print(f"  {ell:10} P = ({a.jordan_type}), vs H^v: {a.vs_hilbert.value}, vs H(Gr)^v: {a.vs_gr.value}")

# Non-unimodal H: no SL element, yet b + c has SLJT.
C = load("ex_3_6_trimmed")
print(f"\n{C!r}")
show(C, "b + c", strings=True)
print("  SL:  ", sl_verdict(C))
print("  SLJT:", sljt_verdict(C))
