"""Drawing-class membership tests for signature functions.

A signature can be realized by a drawing of a given class if and only if it
avoids a small set of forbidden sub-configurations:

* semisimple (adjacent edges never cross): every 4-tuple must take one of
  ten allowed sign forms; the six forbidden forms are exactly those whose
  first or last three signs alternate.
* simple (additionally at most one crossing per edge pair): semisimple, and
  no 5-tuple a<b<c<d<e with sign(a,b,e) = sign(a,d,e) = sign(b,c,d) all
  opposite to sign(a,c,e), which would force a doubly-crossing edge pair.
* pseudolinear (edges extendable to pseudolines): every 4-tuple form must be
  sign-monotone, i.e. have at most one sign change.

The checks are table-driven over the sixteen possible 4-tuple forms; the
tables below are spelled out literally so they can be audited at a glance.

Two-page membership is not a forbidden-form condition: a drawing where
every edge lies entirely in one closed half-plane bounded by the vertex
line gives each edge (i, k) a constant sign over all middle vertices j,
and conversely any such signature is drawn by picking, per edge, the
half-plane named by its constant sign (half-circle arcs realize it).  So
``is_two_page`` just tests per-edge sign constancy.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .sigcore import SignatureFunction, quad_form

# The ten 4-tuple forms realizable by a semisimple x-monotone drawing.
ALLOWED_SEMISIMPLE = frozenset(
    ["++++", "----", "++--", "--++", "-++-", "+--+", "---+", "+++-", "+---", "-+++"]
)

# The eight sign-monotone forms realizable by a pseudolinear drawing.
ALLOWED_PSEUDOLINEAR = frozenset(
    ["++++", "+++-", "++--", "+---", "----", "---+", "--++", "-+++"]
)

# Forms of a crossing K4 (one odd crossing pair); the remaining four allowed
# semisimple forms are the planar K4 configurations.
CONVEX_FORMS = frozenset(["++++", "----", "++--", "--++", "-++-", "+--+"])

ALL_FORMS = tuple(
    a + b + c + d for a in "+-" for b in "+-" for c in "+-" for d in "+-"
)


def _alternating_prefix_or_suffix(form: str) -> bool:
    """True when signs 1-3 or signs 2-4 alternate (the forbidden patterns)."""
    s1, s2, s3, s4 = form
    return (s1 == s3 != s2) or (s2 == s4 != s3)


# Table-driven fast path, indexed by the 4-bit form value (0 bit = '+').
def form_index(form: str) -> int:
    idx = 0
    for ch in form:
        idx = idx * 2 + (ch == "-")
    return idx


SEMISIMPLE_OK = tuple(ALL_FORMS[i] in ALLOWED_SEMISIMPLE for i in range(16))
PSEUDOLINEAR_OK = tuple(ALL_FORMS[i] in ALLOWED_PSEUDOLINEAR for i in range(16))
CONVEX = tuple(ALL_FORMS[i] in CONVEX_FORMS for i in range(16))


@dataclass(frozen=True)
class Verdict:
    """Result of a class-membership check.

    ``witness`` is None exactly when ``valid``; otherwise it is the
    lexicographically first offending tuple of indices, and ``signs`` holds
    the offending form (4-tuple form, or the four pattern signs
    (a,b,e), (a,d,e), (b,c,d), (a,c,e) of a 5-tuple).
    """

    valid: bool
    witness: Optional[tuple[int, ...]] = None
    signs: Optional[str] = None

    def __bool__(self) -> bool:
        return self.valid


def check_semisimple(sigma: SignatureFunction) -> Verdict:
    """Valid iff no 4-tuple takes a forbidden form."""
    for a, b, c, d in combinations(range(1, sigma.n + 1), 4):
        form = quad_form(sigma, a, b, c, d)
        if form not in ALLOWED_SEMISIMPLE:
            return Verdict(False, (a, b, c, d), form)
    return Verdict(True)


def check_simple(sigma: SignatureFunction) -> Verdict:
    """Semisimple, plus no 5-tuple forcing a doubly-crossing edge pair.

    4-tuples are scanned before 5-tuples; both scans are lexicographic, so
    the witness is deterministic.
    """
    verdict = check_semisimple(sigma)
    if not verdict.valid:
        return verdict
    for a, b, c, d, e in combinations(range(1, sigma.n + 1), 5):
        s_abe = sigma.sign(a, b, e)
        s_ade = sigma.sign(a, d, e)
        s_bcd = sigma.sign(b, c, d)
        s_ace = sigma.sign(a, c, e)
        if s_abe == s_ade == s_bcd != s_ace:
            return Verdict(False, (a, b, c, d, e), s_abe + s_ade + s_bcd + s_ace)
    return Verdict(True)


def check_pseudolinear(sigma: SignatureFunction) -> Verdict:
    """Valid iff every 4-tuple form is sign-monotone (at most one sign change)."""
    for a, b, c, d in combinations(range(1, sigma.n + 1), 4):
        form = quad_form(sigma, a, b, c, d)
        if form not in ALLOWED_PSEUDOLINEAR:
            return Verdict(False, (a, b, c, d), form)
    return Verdict(True)


def is_two_page(sigma: SignatureFunction) -> bool:
    """True iff every edge's sign is constant over its middle vertices.

    Such a signature is realized by a 2-page book drawing: each edge (i, k)
    with k - i >= 2 is drawn as a half-circle in the half-plane named by its
    constant sign, and consecutive-vertex edges lie on the vertex line.
    """
    n = sigma.n
    for i in range(1, n - 1):
        for k in range(i + 2, n + 1):
            first = sigma.sign(i, i + 1, k)
            if any(sigma.sign(i, j, k) != first for j in range(i + 2, k)):
                return False
    return True
