"""Shelling orders and lambda matrices at the order-type level.

A vertex sequence is a shelling order of a signature when relabeling the
vertices along that sequence yields a signature that is again realizable by
a semisimple monotone drawing; the forbidden 4-tuple patterns for this are
exactly the six forms rejected by ``classify.check_semisimple``, so the
check reduces to one relabel plus one validity scan.

The lambda matrix stores, for every ordered vertex pair (i, j), the number
of third vertices l for which the ordered triple (i, j, l) is oriented
counter-clockwise.  It determines the signature: some directed pair with
a zero entry always exists (an edge reachable from the outer face), fixing
the orientations of all triangles still riding on that edge; peel the edge,
discount the dead triangles, and repeat.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .classify import check_semisimple
from .sigcore import (
    MINUS,
    PLUS,
    SigFormatError,
    SignatureFunction,
    check_permutation,
    invert,
    orient,
    relabel,
    triples,
)
from .stats import require_semisimple


@dataclass(frozen=True)
class LambdaMatrix:
    """n x n counter-clockwise triangle counts; lam[i][j] is 0-indexed at
    (i-1, j-1) and the diagonal is zero.  Off-diagonal entries satisfy
    lam[i][j] + lam[j][i] = n - 2."""

    n: int
    lam: tuple[tuple[int, ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        return self.lam[i - 1][j - 1]


class NotRealizableError(ValueError):
    """The matrix does not come from a semisimple-valid signature."""


def lambda_matrix(sigma: SignatureFunction) -> LambdaMatrix:
    """Count counter-clockwise triangles through each ordered vertex pair."""
    require_semisimple(sigma)
    n = sigma.n
    lam = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            lam[i - 1][j - 1] = sum(
                orient(sigma, i, j, l) == PLUS
                for l in range(1, n + 1)
                if l != i and l != j
            )
    return LambdaMatrix(n, tuple(tuple(row) for row in lam))


def signature_from_lambda(lam: LambdaMatrix) -> SignatureFunction:
    """Invert ``lambda_matrix`` by peeling zero entries.

    A directed pair (i, j) with no remaining counter-clockwise triangle
    pins every triangle still riding on edge {i, j} to clockwise in that
    direction.  Removing the edge kills those triangles, so the entries of
    the other edges drop by their contribution; the contribution of a dead
    triangle {a, b, c} to the directed pair (a, b) is 1 exactly when
    (a, b, c) is counter-clockwise, with the same three sort-parity cases
    as ``stats.side_count``.  Raises NotRealizableError when no zero entry
    exists or the reconstruction fails verification.
    """
    n = lam.n
    work = [list(row) for row in lam.lam]
    for i in range(n):
        if work[i][i] != 0:
            raise NotRealizableError("diagonal entries must be zero")
        for j in range(n):
            if i != j and not 0 <= work[i][j] <= n - 2:
                raise NotRealizableError(f"entry ({i + 1},{j + 1}) out of range")
            if i < j and work[i][j] + work[j][i] != n - 2:
                raise NotRealizableError(
                    f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) must sum to n-2"
                )

    signs: dict[tuple[int, int, int], str] = {}
    alive_edge = {frozenset(e): True for e in combinations(range(1, n + 1), 2)}
    # A triple is alive until the first of its three edges is peeled.
    alive_triple = {t: True for t in triples(n)}

    def _parity3(a: int, b: int, c: int) -> bool:
        return bool(((a > b) + (a > c) + (b > c)) & 1)

    def set_orient(i: int, j: int, l: int, ccw: bool) -> None:
        """Record the orientation of ordered (i, j, l) on the sorted triple."""
        x, y, z = sorted((i, j, l))
        signs[(x, y, z)] = PLUS if (ccw ^ _parity3(i, j, l)) else MINUS

    def oriented_ccw(a: int, b: int, c: int) -> bool:
        x, y, z = sorted((a, b, c))
        stored = signs[(x, y, z)] == PLUS
        return stored ^ _parity3(a, b, c)

    remaining = sum(alive_triple.values())
    while remaining:
        peeled = None
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j or not alive_edge[frozenset((i, j))]:
                    continue
                if work[i - 1][j - 1] == 0 and any(
                    alive_triple[tuple(sorted((i, j, l)))]
                    for l in range(1, n + 1)
                    if l not in (i, j)
                ):
                    peeled = (i, j)
                    break
            if peeled:
                break
        if peeled is None:
            raise NotRealizableError("no peelable zero entry; not semisimple-realizable")
        i, j = peeled
        dead: list[tuple[int, int, int]] = []
        for l in range(1, n + 1):
            if l in (i, j):
                continue
            t = tuple(sorted((i, j, l)))
            if alive_triple[t]:
                set_orient(i, j, l, ccw=False)
                alive_triple[t] = False
                dead.append(t)
                remaining -= 1
        alive_edge[frozenset((i, j))] = False
        for t in dead:
            third = {i, j}
            (l,) = set(t) - third
            for a, b in ((i, l), (j, l)):
                if not alive_edge[frozenset((a, b))]:
                    continue
                c = ({i, j, l} - {a, b}).pop()
                if oriented_ccw(a, b, c):
                    work[a - 1][b - 1] -= 1
                if oriented_ccw(b, a, c):
                    work[b - 1][a - 1] -= 1

    out = "".join(signs[t] for t in triples(n))
    sigma = SignatureFunction(n, out)
    if not check_semisimple(sigma).valid or lambda_matrix(sigma).lam != lam.lam:
        raise NotRealizableError("reconstruction failed verification")
    return sigma


# --- lambda text format ------------------------------------------------------
#
# Line 1: "lam v1"; line 2: "n <n>"; then n rows of n space-separated ints.


def parse_lambda(text: str | bytes) -> LambdaMatrix:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines or lines[0] != "lam v1":
        raise SigFormatError("bad header; expected 'lam v1'")
    if len(lines) < 2 or not lines[1].startswith("n ") or not lines[1][2:].isdigit():
        raise SigFormatError("bad vertex-count line")
    n = int(lines[1][2:])
    rows = lines[2:]
    if len(rows) != n:
        raise SigFormatError(f"expected {n} matrix rows, got {len(rows)}")
    lam = []
    for row in rows:
        values = row.split()
        if len(values) != n or not all(v.lstrip("-").isdigit() for v in values):
            raise SigFormatError(f"bad matrix row {row!r}")
        lam.append(tuple(int(v) for v in values))
    return LambdaMatrix(n, tuple(lam))


def emit_lambda(lam: LambdaMatrix) -> str:
    rows = "\n".join(" ".join(str(v) for v in row) for row in lam.lam)
    return f"lam v1\nn {lam.n}\n{rows}\n" if lam.n else f"lam v1\nn {lam.n}\n"


# --- shelling orders ---------------------------------------------------------


def is_shellable_order(sigma: SignatureFunction, pi: Sequence[int]) -> bool:
    """Whether visiting the vertices as pi[0], pi[1], ... is a shelling order.

    True exactly when the signature relabeled along the sequence (vertex
    pi[t] becomes vertex t+1) is still semisimple-valid.
    """
    require_semisimple(sigma)
    p = check_permutation(pi, sigma.n)
    return check_semisimple(relabel(sigma, invert(p))).valid


def find_shelling_order(sigma: SignatureFunction) -> Optional[tuple[int, ...]]:
    """Lexicographically first shelling order, or None.

    Backtracking over vertex placements; a partial order dies as soon as
    the four placed vertices of some 4-tuple already show a forbidden
    form.  The identity is always valid for a semisimple-valid signature,
    so the search returns immediately in the common case.
    """
    require_semisimple(sigma)
    n = sigma.n
    chosen: list[int] = []
    used = [False] * (n + 1)

    def placed_ok() -> bool:
        if len(chosen) < 4:
            return True
        *_, newest = chosen
        for a, b, c in combinations(chosen[:-1], 3):
            form = "".join(
                (
                    orient(sigma, *tri)
                    for tri in (
                        (a, b, c),
                        (a, b, newest),
                        (a, c, newest),
                        (b, c, newest),
                    )
                )
            )
            if (form[0] == form[2] != form[1]) or (form[1] == form[3] != form[2]):
                return False
        return True

    def rec() -> bool:
        if len(chosen) == n:
            return True
        for v in range(1, n + 1):
            if used[v]:
                continue
            used[v] = True
            chosen.append(v)
            if placed_ok() and rec():
                return True
            chosen.pop()
            used[v] = False
        return False

    return tuple(chosen) if rec() else None
