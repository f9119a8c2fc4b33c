"""Switching operations on signatures of simple monotone drawings.

Five operations turn a simple signature into the signature of a drawing that
is the same up to a homeomorphism of the sphere:

* vertical reflection: negate every sign;
* horizontal reflection: sign(i,j,k) <- sign(n+1-k, n+1-j, n+1-i), verbatim,
  with no extra negation (mirroring x preserves above/below relations);
* shifting v_1 past all other vertices, applicable when every edge at v_1
  stays on one side of the vertex line;
* switching two consecutive vertices v_j, v_{j+1}, applicable when all
  signs tying them to later vertices agree and all signs tying them to
  earlier vertices take the opposite value;
* rerouting the edge v_1 v_n around the drawing, applicable when its sign
  is constant over all middle vertices, which it always is in a
  crossing-minimal drawing.

Two signatures are switching equivalent when a sequence of these operations
maps one to the other.  Orbits are computed by breadth-first closure; the
canonical form of an orbit is its lexicographically smallest member
('+' sorts before '-').

All functions here assume their input passes ``classify.check_simple``;
``equivalence_class`` validates once on entry and re-validates every
generated member, dropping (and recording) any that fail, although no
operation is known to produce one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Optional

from .classify import check_simple
from .sigcore import (
    MINUS,
    PLUS,
    PreconditionError,
    SignatureFunction,
    negate,
    relabel,
    triple_rank,
    triples,
)

VERTICAL_REFLECT = "vertical_reflect"
HORIZONTAL_REFLECT = "horizontal_reflect"
SHIFT_V1 = "shift_v1"
SWITCH_CONSECUTIVE = "switch_consecutive"
FLIP_V1VN = "flip_v1vn"

_NEGATE_ALL = str.maketrans(PLUS + MINUS, MINUS + PLUS)


@dataclass(frozen=True)
class SwitchOp:
    """One switching operation; ``j`` is set only for SWITCH_CONSECUTIVE."""

    kind: str
    j: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == SWITCH_CONSECUTIVE:
            if self.j is None or self.j < 1:
                raise ValueError("switch_consecutive needs a position j >= 1")
        elif self.kind in (VERTICAL_REFLECT, HORIZONTAL_REFLECT, SHIFT_V1, FLIP_V1VN):
            if self.j is not None:
                raise ValueError(f"{self.kind} takes no parameter")
        else:
            raise ValueError(f"unknown operation kind {self.kind!r}")

    def __str__(self) -> str:
        return f"{self.kind}({self.j})" if self.j is not None else self.kind


def all_ops(n: int) -> tuple[SwitchOp, ...]:
    """Every operation instance available on n vertices."""
    ops = [
        SwitchOp(VERTICAL_REFLECT),
        SwitchOp(HORIZONTAL_REFLECT),
        SwitchOp(SHIFT_V1),
        SwitchOp(FLIP_V1VN),
    ]
    ops.extend(SwitchOp(SWITCH_CONSECUTIVE, j) for j in range(1, n))
    return tuple(ops)


def applicable(sigma: SignatureFunction, op: SwitchOp) -> bool:
    """Whether ``op`` may be applied to ``sigma`` (assumed simple-valid)."""
    n = sigma.n
    kind = op.kind
    if kind in (VERTICAL_REFLECT, HORIZONTAL_REFLECT):
        return True
    if kind == SHIFT_V1:
        # Every edge (1, k) must keep one sign over all its middle vertices.
        for k in range(4, n + 1):
            first = sigma.sign(1, 2, k)
            if any(sigma.sign(1, i, k) != first for i in range(3, k)):
                return False
        return True
    if kind == SWITCH_CONSECUTIVE:
        j = op.j
        if j is None or j >= n:
            return False
        later = {sigma.sign(j, j + 1, k) for k in range(j + 2, n + 1)}
        earlier = {sigma.sign(i, j, j + 1) for i in range(1, j)}
        if len(later) > 1 or len(earlier) > 1:
            return False
        if later and earlier:
            return next(iter(later)) != next(iter(earlier))
        return True
    if kind == FLIP_V1VN:
        if n < 3:
            return True
        vals = {sigma.sign(1, i, n) for i in range(2, n)}
        return len(vals) == 1
    raise ValueError(f"unknown operation kind {kind!r}")


def apply_op(sigma: SignatureFunction, op: SwitchOp) -> SignatureFunction:
    """Apply an operation; raises PreconditionError if it is not applicable."""
    if not applicable(sigma, op):
        raise PreconditionError(f"operation {op} is not applicable here")
    n = sigma.n
    kind = op.kind
    if kind == VERTICAL_REFLECT:
        return SignatureFunction(n, sigma.signs.translate(_NEGATE_ALL))
    if kind == HORIZONTAL_REFLECT:
        out = [
            sigma.sign(n + 1 - k, n + 1 - j, n + 1 - i) for i, j, k in triples(n)
        ]
        return SignatureFunction(n, "".join(out))
    if kind == SHIFT_V1:
        # v_1 travels through the outer face to the last position and every
        # other vertex slides down one.  Triples among the surviving vertices
        # keep their signs.  Each redrawn edge (old (1, k), new (k-1, n))
        # stays on its side of the vertex line, so the vertices it now spans
        # all sit on the opposite side: the new sign is the edge's constant
        # old sign.  The old edge (1, 2) spanned no vertex; it is rerouted
        # above everything ('+'), and the flip operation relates the two
        # possible reroutings.
        out = []
        for a, b, c in triples(n):
            if c < n:
                out.append(sigma.sign(a + 1, b + 1, c + 1))
            elif a == 1:
                out.append(PLUS)
            else:
                out.append(sigma.sign(1, 2, a + 1))
        return SignatureFunction(n, "".join(out))
    if kind == SWITCH_CONSECUTIVE:
        j = op.j
        assert j is not None
        pi = tuple(
            j + 1 if v == j else j if v == j + 1 else v for v in range(1, n + 1)
        )
        return relabel(sigma, pi)
    if kind == FLIP_V1VN:
        out = list(sigma.signs)
        for i in range(2, n):
            r = triple_rank(n, 1, i, n)
            out[r] = negate(out[r])
        return SignatureFunction(n, "".join(out))
    raise ValueError(f"unknown operation kind {kind!r}")


@dataclass(frozen=True)
class EquivClass:
    """Orbit of a signature under the switching operations.

    ``members`` holds sign strings; ``representative`` is the smallest one.
    ``dropped`` records any generated signature that failed re-validation
    together with the operation that produced it (expected to stay empty).
    """

    n: int
    members: frozenset[str]
    representative: str
    dropped: tuple[tuple[str, SwitchOp, str], ...] = field(default=())

    def signatures(self) -> Iterator[SignatureFunction]:
        for s in sorted(self.members):
            yield SignatureFunction(self.n, s)

    def __len__(self) -> int:
        return len(self.members)


def _require_simple(sigma: SignatureFunction) -> None:
    verdict = check_simple(sigma)
    if not verdict.valid:
        raise PreconditionError(
            f"signature is not simple-valid: witness {verdict.witness} "
            f"signs {verdict.signs}"
        )


def equivalence_class(sigma: SignatureFunction) -> EquivClass:
    """Breadth-first closure of ``sigma`` under all applicable operations."""
    _require_simple(sigma)
    n = sigma.n
    ops = all_ops(n)
    seen: set[str] = {sigma.signs}
    frontier: list[str] = [sigma.signs]
    dropped: list[tuple[str, SwitchOp, str]] = []
    while frontier:
        next_frontier: list[str] = []
        for s in frontier:
            cur = SignatureFunction(n, s)
            for op in ops:
                if not applicable(cur, op):
                    continue
                new = apply_op(cur, op)
                if new.signs in seen:
                    continue
                if check_simple(new).valid:
                    seen.add(new.signs)
                    next_frontier.append(new.signs)
                else:
                    dropped.append((s, op, new.signs))
        frontier = next_frontier
    return EquivClass(
        n=n,
        members=frozenset(seen),
        representative=min(seen),
        dropped=tuple(dropped),
    )


def canonical(sigma: SignatureFunction) -> SignatureFunction:
    """Lexicographically smallest member of the signature's orbit.

    Idempotent and constant on each orbit, so it serves as the orbit key
    when counting switching classes.
    """
    cls = equivalence_class(sigma)
    return SignatureFunction(sigma.n, cls.representative)


def canonical_map(sigmas: list[SignatureFunction]) -> dict[str, str]:
    """Map each input sign string to its orbit representative.

    Orbits are computed once per class, not once per member.
    """
    out: dict[str, str] = {}
    for sigma in sigmas:
        if sigma.signs in out:
            continue
        cls = equivalence_class(sigma)
        for member in cls.members:
            out[member] = cls.representative
    return {s.signs: out[s.signs] for s in sigmas}
