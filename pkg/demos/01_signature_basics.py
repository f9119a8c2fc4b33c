"""Encode drawings as signatures and test which drawing classes admit them.

A signature assigns '+' or '-' to every increasing vertex triple (i, j, k)
of K_n: '-' when the middle vertex v_j sits above the arc of edge (i, k),
'+' when below.  Ten of the sixteen possible 4-tuple sign patterns are
realizable without adjacent crossings; eight are realizable by pseudoline
extensions.
"""

from monosig import (
    all_plus,
    check_pseudolinear,
    check_semisimple,
    check_simple,
    emit_signature,
    is_two_page,
    parse_signature,
    quad_form,
)
from monosig.sigcore import SignatureFunction

print("== the SIG text format ==")
sigma = parse_signature("sig v1\nn 4\n+++-\n")
print(emit_signature(sigma), end="")
print("sign(2,3,4) =", sigma.sign(2, 3, 4))
print("4-tuple form of (1,2,3,4):", quad_form(sigma, 1, 2, 3, 4))
print()

print("== class membership ==")
examples = {
    "planar K4     (+++-)": SignatureFunction(4, "+++-"),
    "convex K4     (++++)": all_plus(4),
    "one-sided mix (-++-)": SignatureFunction(4, "-++-"),
    "forbidden     (+-+-)": SignatureFunction(4, "+-+-"),
}
print(f"{'signature':>22}  semisimple  simple  pseudolinear  two-page")
for name, sig in examples.items():
    row = (
        check_semisimple(sig).valid,
        check_simple(sig).valid,
        check_pseudolinear(sig).valid,
        is_two_page(sig),
    )
    print(f"{name:>22}  " + "  ".join(f"{str(v):>9}" for v in row))
print()

print("== a doubly-crossing pair needs five vertices ==")
gap = SignatureFunction(5, "+-+--++--+")
print("signature:", gap.signs)
print("semisimple:", check_semisimple(gap).valid)
verdict = check_simple(gap)
print("simple:", verdict.valid, "- witness 5-tuple:", verdict.witness,
      "signs:", verdict.signs)
