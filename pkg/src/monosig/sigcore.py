"""Core encoding: signature functions of x-monotone drawings of K_n.

An x-monotone drawing of the complete graph on vertices v_1, ..., v_n
(ordered by x-coordinate) is encoded by one sign per vertex triple
i < j < k: the sign is '-' when the middle vertex v_j lies above the arc
of edge v_i v_k, and '+' when it lies below.  For semisimple drawings
(no two adjacent edges cross) this coincides with the orientation of the
triangle v_i v_j v_k: '+' means counter-clockwise, '-' clockwise.

All vertex indices are 1-based throughout the package, and the signs of a
signature are stored as a flat string in lexicographic triple order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

PLUS = "+"
MINUS = "-"

Sign = str  # exactly '+' or '-'


class SigFormatError(ValueError):
    """Raised for malformed SIG or lambda-matrix input."""


class PreconditionError(ValueError):
    """Raised when an operation receives a signature outside its input class."""


def negate(sign: Sign) -> Sign:
    """Opposite sign; an involution on {'+', '-'}."""
    return MINUS if sign == PLUS else PLUS


def triples(n: int) -> Iterator[tuple[int, int, int]]:
    """All triples 1 <= i < j < k <= n in lexicographic order."""
    for i in range(1, n - 1):
        for j in range(i + 1, n):
            for k in range(j + 1, n + 1):
                yield (i, j, k)


@lru_cache(maxsize=None)
def _rank_table(n: int) -> dict[tuple[int, int, int], int]:
    return {t: r for r, t in enumerate(triples(n))}


def triple_rank(n: int, i: int, j: int, k: int) -> int:
    """Position of triple (i,j,k) in the lexicographic order of all triples.

    Closed form: triples starting below i come first, then pairs (j', k')
    with i < j' < k' <= n preceding (j, k).
    """
    if not (1 <= i < j < k <= n):
        raise ValueError(f"not an increasing triple in [1,{n}]: ({i},{j},{k})")
    return (
        comb(n, 3)
        - comb(n - i + 1, 3)
        + comb(n - i, 2)
        - comb(n - j + 1, 2)
        + (k - j - 1)
    )


@dataclass(frozen=True)
class SignatureFunction:
    """Total map from increasing vertex triples of [n] to {'+', '-'}.

    Immutable; safe to share between threads or processes.  `signs` holds
    exactly C(n,3) characters in lexicographic triple order.
    """

    n: int
    signs: str

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        expected = comb(self.n, 3)
        if len(self.signs) != expected:
            raise ValueError(
                f"need {expected} signs for n={self.n}, got {len(self.signs)}"
            )
        bad = set(self.signs) - {PLUS, MINUS}
        if bad:
            raise ValueError(f"invalid sign characters: {sorted(bad)!r}")

    def sign(self, i: int, j: int, k: int) -> Sign:
        """Sign of the increasing triple (i, j, k)."""
        try:
            return self.signs[_rank_table(self.n)[(i, j, k)]]
        except KeyError:
            raise ValueError(
                f"not an increasing triple in [1,{self.n}]: ({i},{j},{k})"
            ) from None

    def orient(self, a: int, b: int, c: int) -> Sign:
        """Orientation of the ordered triple (a, b, c) of distinct vertices.

        '+' for counter-clockwise.  Equals the stored sign of the sorted
        triple, negated when sorting (a, b, c) is an odd permutation.
        """
        return orient(self, a, b, c)

    def __str__(self) -> str:
        return f"n={self.n}:{self.signs}"


def all_plus(n: int) -> SignatureFunction:
    """The all-'+' signature (every edge arc above all intermediate vertices)."""
    return SignatureFunction(n, PLUS * comb(n, 3))


def from_signs(n: int, signs: Sequence[Sign] | str) -> SignatureFunction:
    return SignatureFunction(n, "".join(signs))


# --- SIG file format -------------------------------------------------------
#
# Line 1: "sig v1"
# Line 2: "n <decimal vertex count>"
# Line 3: C(n,3) characters from {'+', '-'} in lexicographic triple order
# Lines separated by a single line feed; a trailing line feed is optional on
# input and always emitted on output.


def parse_signature(text: bytes | str) -> SignatureFunction:
    """Parse the SIG format.  Round-trips with emit_signature."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise SigFormatError(f"SIG data is not ASCII: {exc}") from None
    lines = text.split("\n")
    if len(lines) == 4 and lines[3] == "":
        lines = lines[:3]  # optional trailing line feed
    if len(lines) != 3:
        raise SigFormatError(f"expected 3 lines, got {len(lines)}")
    if lines[0] != "sig v1":
        raise SigFormatError(f"bad header {lines[0]!r}, expected 'sig v1'")
    if not lines[1].startswith("n ") or not lines[1][2:].isdigit():
        raise SigFormatError(f"bad vertex-count line {lines[1]!r}")
    n = int(lines[1][2:])
    signs = lines[2]
    if len(signs) != comb(n, 3):
        raise SigFormatError(
            f"sign string has length {len(signs)}, expected C({n},3)={comb(n, 3)}"
        )
    bad = set(signs) - {PLUS, MINUS}
    if bad:
        raise SigFormatError(f"invalid sign characters: {sorted(bad)!r}")
    return SignatureFunction(n, signs)


def emit_signature(sigma: SignatureFunction) -> str:
    """Serialize to the SIG format, bit-exact, with trailing line feed."""
    return f"sig v1\nn {sigma.n}\n{sigma.signs}\n"


# --- elementary queries ----------------------------------------------------


def quad_form(sigma: SignatureFunction, a: int, b: int, c: int, d: int) -> str:
    """The four signs (abc, abd, acd, bcd) of a 4-tuple a < b < c < d.

    Returned as a 4-character string, e.g. '+-+-'.
    """
    if not (1 <= a < b < c < d <= sigma.n):
        raise ValueError(
            f"indices must satisfy 1 <= a < b < c < d <= {sigma.n}: ({a},{b},{c},{d})"
        )
    s = sigma.signs
    rank = _rank_table(sigma.n)
    return (
        s[rank[(a, b, c)]]
        + s[rank[(a, b, d)]]
        + s[rank[(a, c, d)]]
        + s[rank[(b, c, d)]]
    )


def _sort3(a: int, b: int, c: int) -> tuple[int, int, int, int]:
    """Sort three distinct values; also return the parity (0 even, 1 odd)."""
    inv = (a > b) + (a > c) + (b > c)
    x, y, z = sorted((a, b, c))
    return x, y, z, inv & 1


def orient(sigma: SignatureFunction, a: int, b: int, c: int) -> Sign:
    """Orientation sign of the ordered triple (a, b, c); '+' = counter-clockwise."""
    x, y, z, odd = _sort3(a, b, c)
    s = sigma.sign(x, y, z)
    return negate(s) if odd else s


def check_permutation(pi: Sequence[int], n: int) -> tuple[int, ...]:
    """Validate that pi is a bijection on [n] given as the images of 1..n."""
    p = tuple(pi)
    if len(p) != n or sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of [{n}]: {p}")
    return p


def relabel(sigma: SignatureFunction, pi: Sequence[int]) -> SignatureFunction:
    """Rename vertex i to pi[i-1] and re-derive all triple signs.

    The sign of an old triple lands on the sorted image triple, negated when
    sorting the image is an odd permutation (orientation reverses under odd
    triple permutations).  relabel is a group action:
    relabel(sigma, pi o rho) == relabel(relabel(sigma, rho), pi).
    """
    n = sigma.n
    p = check_permutation(pi, n)
    rank = _rank_table(n)
    out = [PLUS] * comb(n, 3)
    s = sigma.signs
    for r, (i, j, k) in enumerate(triples(n)):
        x, y, z, odd = _sort3(p[i - 1], p[j - 1], p[k - 1])
        out[rank[(x, y, z)]] = negate(s[r]) if odd else s[r]
    return SignatureFunction(n, "".join(out))


def compose(pi: Sequence[int], rho: Sequence[int]) -> tuple[int, ...]:
    """Composition pi o rho as images of 1..n (apply rho first)."""
    return tuple(pi[r - 1] for r in rho)


def invert(pi: Sequence[int]) -> tuple[int, ...]:
    """Inverse permutation, as images of 1..n."""
    out = [0] * len(pi)
    for i, v in enumerate(pi, start=1):
        out[v - 1] = i
    return tuple(out)
