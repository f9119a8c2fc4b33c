"""Edge statistics and crossing-count identities for semisimple signatures.

For an edge (v_i, v_k) of a semisimple drawing, every other vertex w lies on
the left or right side of the arc directed from v_i to v_k, decided by the
orientation of the triangle traced i, k, w.  An edge with side counts
(k, n-2-k) is a k-edge, recorded once at k = min of the two sides, so
0 <= k <= floor(n/2) - 1.

The cumulative vectors
    le[k]     = sum_{i<=k} e[i]
    lele[k]   = sum_{j<=k} le[j]
    lelele[k] = sum_{j<=k} lele[j]
tie the k-edge distribution to the number of odd-crossing edge pairs, which
for these signatures equals the number of convex 4-tuples.  All formulas are
evaluated in exact integer arithmetic; no floats anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .classify import CONVEX_FORMS, check_semisimple
from .sigcore import MINUS, PLUS, PreconditionError, SignatureFunction, quad_form


def zeta(n: int) -> int:
    """Hill's quantity Z(n) = (1/4) floor(n/2) floor((n-1)/2) floor((n-2)/2) floor((n-3)/2).

    The product of the four floors is always divisible by 4, so the result
    is an exact integer.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    prod = (n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2)
    assert prod % 4 == 0
    return prod // 4


def require_semisimple(sigma: SignatureFunction) -> None:
    verdict = check_semisimple(sigma)
    if not verdict.valid:
        raise PreconditionError(
            f"signature is not semisimple-valid: 4-tuple {verdict.witness} "
            f"has forbidden form {verdict.signs}"
        )


def side_count(sigma: SignatureFunction, i: int, k: int) -> tuple[int, int]:
    """(left, right) vertex counts for the edge directed from v_i to v_k.

    A vertex w counts as left when the triangle traced (i, k, w) is
    counter-clockwise.  The three w ranges need different sort parities:

    * i < w < k: (i,k,w) sorts to (i,w,k) by one transposition (odd), so
      counter-clockwise means stored sign '-';
    * w < i: (i,k,w) sorts to (w,i,k) by a 3-cycle (even), stored sign '+';
    * w > k: (i,k,w) is already sorted, stored sign '+'.
    """
    require_semisimple(sigma)
    return _side_count_unchecked(sigma, i, k)


def _side_count_unchecked(sigma: SignatureFunction, i: int, k: int) -> tuple[int, int]:
    n = sigma.n
    if not (1 <= i < k <= n):
        raise ValueError(f"need 1 <= i < k <= {n}, got ({i},{k})")
    left = 0
    sign = sigma.sign
    for w in range(1, i):
        left += sign(w, i, k) == PLUS
    for w in range(i + 1, k):
        left += sign(i, w, k) == MINUS
    for w in range(k + 1, n + 1):
        left += sign(i, k, w) == PLUS
    return left, n - 2 - left


@dataclass(frozen=True)
class EdgeStats:
    """k-edge counts and their cumulative sums for one signature.

    Arrays have length floor(n/2), indexed by k.  ``convex_quads`` is the
    number of 4-tuples whose form corresponds to a crossing K4.
    """

    n: int
    e_k: tuple[int, ...]
    le: tuple[int, ...]
    lele: tuple[int, ...]
    lelele: tuple[int, ...]
    convex_quads: int


def convex_quad_count(sigma: SignatureFunction) -> int:
    """Number of 4-tuples with a convex (crossing-K4) form.

    For simple signatures this is the crossing number of the drawing built
    by ``construct.realize``; for semisimple ones it counts the edge pairs
    that cross an odd number of times in such a drawing.
    """
    require_semisimple(sigma)
    return _convex_quad_count_unchecked(sigma)


def _convex_quad_count_unchecked(sigma: SignatureFunction) -> int:
    return sum(
        quad_form(sigma, a, b, c, d) in CONVEX_FORMS
        for a, b, c, d in combinations(range(1, sigma.n + 1), 4)
    )


def k_edge_vector(sigma: SignatureFunction) -> EdgeStats:
    """E_k counts plus cumulative sums and the convex 4-tuple count.

    Each edge is recorded once, at k = min(left, right); for even n an edge
    with both sides equal to n/2 - 1 still counts once (this single-count
    convention is what the cumulative arrays below build on).
    """
    require_semisimple(sigma)
    n = sigma.n
    half = n // 2
    e_k = [0] * half
    for i, k in combinations(range(1, n + 1), 2):
        left, right = _side_count_unchecked(sigma, i, k)
        e_k[min(left, right)] += 1
    le: list[int] = []
    lele: list[int] = []
    lelele: list[int] = []
    run1 = run2 = run3 = 0
    for k in range(half):
        run1 += e_k[k]
        le.append(run1)
        run2 += run1
        lele.append(run2)
        run3 += run2
        lelele.append(run3)
    return EdgeStats(
        n=n,
        e_k=tuple(e_k),
        le=tuple(le),
        lele=tuple(lele),
        lelele=tuple(lelele),
        convex_quads=_convex_quad_count_unchecked(sigma),
    )


@dataclass(frozen=True)
class IdentityReport:
    """The same crossing quantity computed four independent ways.

    * cr_from_quads: direct convex 4-tuple count;
    * cr_from_ek: 3 C(n,4) - sum_k k (n-2-k) E_k;
    * cr_from_lele: 2 sum_{k<=floor(n/2)-2} lele[k]
      - C(n,2) floor((n-2)/2) / 2 - (n even) * lele[floor(n/2)-2];
    * lelele_compact: 2 lelele[floor(n/2)-2] - n(n-1)(n-3)/8 for odd n,
      lelele[floor(n/2)-3] + lelele[floor(n/2)-2] - n(n-1)(n-2)/8 for even n.
    """

    cr_from_quads: int
    cr_from_ek: int
    cr_from_lele: int
    lelele_compact: int
    all_equal: bool


def verify_identities(sigma: SignatureFunction) -> IdentityReport:
    """Evaluate all four crossing formulas exactly and compare them."""
    require_semisimple(sigma)
    n = sigma.n
    if n < 3:
        raise PreconditionError("identities need n >= 3")
    st = k_edge_vector(sigma)
    half = n // 2

    cr_quads = st.convex_quads

    cr_ek = 3 * comb(n, 4) - sum(
        k * (n - 2 - k) * st.e_k[k] for k in range(half)
    )

    # lele[-1] is an empty sum: treat indices below 0 as 0.
    def lele(k: int) -> int:
        return st.lele[k] if k >= 0 else 0

    def lelele(k: int) -> int:
        return st.lelele[k] if k >= 0 else 0

    base = comb(n, 2) * ((n - 2) // 2)
    assert base % 2 == 0
    cr_lele = 2 * sum(lele(k) for k in range(half - 1)) - base // 2
    if n % 2 == 0:
        cr_lele -= lele(half - 2)

    if n % 2 == 1:
        prod = n * (n - 1) * (n - 3)
        assert prod % 8 == 0
        compact = 2 * lelele(half - 2) - prod // 8
    else:
        prod = n * (n - 1) * (n - 2)
        assert prod % 8 == 0
        compact = lelele(half - 3) + lelele(half - 2) - prod // 8

    return IdentityReport(
        cr_from_quads=cr_quads,
        cr_from_ek=cr_ek,
        cr_from_lele=cr_lele,
        lelele_compact=compact,
        all_equal=(cr_quads == cr_ek == cr_lele == compact),
    )
