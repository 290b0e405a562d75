"""Jordan types on tensor products: Clebsch-Gordan prediction against direct computation."""

from pathlib import Path

from lefschetz import load_presentation, tensor_jordan_type, tensor_lefschetz_report, tensor_product

HERE = Path(__file__).resolve().parent / "presentations"
A = load_presentation(HERE / "ex_2_11_a.alg").algebra()
B = load_presentation(HERE / "ex_2_11_b.alg").algebra()

print(A, B, sep="\n")
print("H(A)^v =", A.hilbert.conjugate(), "  H(B)^v =", B.hilbert.conjugate())

C = tensor_product(A, B).algebra
print(f"\nC = A (x) B: dim {C.dim}, H(C) = {C.hilbert}, H(C)^v = ({C.hilbert.conjugate()})")

rep = tensor_lefschetz_report(A, B, "x + y", "z")
print(f"predicted  ({tensor_jordan_type((4, 1), (4, 1))})")
print(f"computed   ({rep.actual})")
print(f"x+y SL on A: {rep.sl_left}; z SL on B: {rep.sl_right}; x+y+z SL on C: {rep.sl_tensor}")
for note in rep.notes:
    print("note:", note)
