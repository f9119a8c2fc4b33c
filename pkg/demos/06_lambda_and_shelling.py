"""Lambda matrices and shelling orders.

The lambda matrix counts counter-clockwise triangles through each ordered
vertex pair.  It determines the signature: zero entries mark edges on the
outer face, and peeling them one by one pins every triangle orientation.
A shelling order is a vertex sequence along which the signature stays
realizable; checking one is a relabel plus a validity scan.
"""

import random

from monosig import all_plus
from monosig.search import random_valid_signature
from monosig.shellab import (
    emit_lambda,
    find_shelling_order,
    is_shellable_order,
    lambda_matrix,
    signature_from_lambda,
)
from monosig.sigcore import SignatureFunction

sigma = SignatureFunction(5, "+-+--++--+")
lam = lambda_matrix(sigma)
print("lambda matrix of", sigma.signs)
print(emit_lambda(lam), end="")
print("inverts back to the same signature:",
      signature_from_lambda(lam) == sigma)
print()

print("round trip on 200 random 7-vertex signatures:", end=" ")
rng = random.Random(0)
ok = all(
    signature_from_lambda(lambda_matrix(s)) == s
    for s in (random_valid_signature(7, "semisimple", rng) for _ in range(200))
)
print("ok" if ok else "FAILED")
print()

print("shelling orders of the convex K5 (every rotation works):")
for pi in ((1, 2, 3, 4, 5), (2, 3, 4, 5, 1), (5, 4, 3, 2, 1), (2, 1, 3, 4, 5)):
    print(f"  {pi}: {is_shellable_order(all_plus(5), pi)}")
print("first shelling order found:", find_shelling_order(all_plus(5)))
