"""Switching operations and the orbits they generate.

Five operations (two reflections, shifting the first vertex around the
drawing, switching a consecutive pair, rerouting the outermost edge) map a
simple signature to the signature of a homeomorphic drawing.  The orbit of
a signature under these operations is its switching class; the smallest
member serves as the canonical representative.
"""

from monosig import all_plus, canonical, convex_quad_count, equivalence_class
from monosig.sigcore import SignatureFunction
from monosig.transform import (
    SHIFT_V1,
    SWITCH_CONSECUTIVE,
    VERTICAL_REFLECT,
    SwitchOp,
    applicable,
    apply_op,
)

sigma = SignatureFunction(4, "+++-")
print("start:", sigma.signs)
for op in (SwitchOp(VERTICAL_REFLECT), SwitchOp(SHIFT_V1), SwitchOp(SWITCH_CONSECUTIVE, 2)):
    if applicable(sigma, op):
        print(f"  {op} ->", apply_op(sigma, op).signs)
    else:
        print(f"  {op} -> not applicable")
print()

for name, sig in (
    ("triangle", SignatureFunction(3, "+")),
    ("planar K4", SignatureFunction(4, "+++-")),
    ("convex K5", all_plus(5)),
):
    cls = equivalence_class(sig)
    counts = {convex_quad_count(SignatureFunction(sig.n, s)) for s in cls.members}
    print(f"{name}: orbit size {len(cls)}, canonical {cls.representative!r}, "
          f"crossing count constant: {counts}")
print()

print("canonical is a class invariant:")
a = canonical(SignatureFunction(3, "+"))
b = canonical(SignatureFunction(3, "-"))
print("  canonical('+') == canonical('-'):", a == b)
