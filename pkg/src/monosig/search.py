"""Exhaustive enumeration and crossing minimization over valid signatures.

The search is vertex-incremental: a valid signature on the first m vertices
is extended to m+1 by assigning the C(m,2) new triples (i, j, m+1) in
lexicographic (i, j) order.  Every 4-tuple (and, at the simple level,
5-tuple) constraint is checked at the moment its last triple receives a
sign, so invalid branches die as early as possible and no constraint is
ever re-scanned.

Crossing minimization is a branch-and-bound over the same tree: the number
of convex 4-tuples already completed can only grow when vertices are added,
so a branch whose partial count exceeds the incumbent is dead.  The
incumbent-dominance prune is the only bound used; with a fixed
configuration the node visit order and all results are deterministic.

Large runs can be sharded by prefix (a complete valid signature on an
initial vertex segment); shards explore disjoint subtrees, may run in
worker processes that share only a monotonically improving incumbent (a
stale bound is still a valid bound, so correctness never depends on
freshness), and merge deterministically.  A textual checkpoint of pending
shards makes long runs resumable.
"""

from __future__ import annotations

import multiprocessing
import os
import time
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import combinations
from math import comb
from random import Random
from typing import Callable, Optional, Sequence

from . import transform
from .classify import CONVEX, PSEUDOLINEAR_OK, SEMISIMPLE_OK
from .sigcore import MINUS, PLUS, SignatureFunction, triple_rank, triples

SEMISIMPLE = "semisimple"
SIMPLE = "simple"
PSEUDOLINEAR = "pseudolinear"
LEVELS = (SEMISIMPLE, SIMPLE, PSEUDOLINEAR)

ENUMERATE_ALL = "enumerate"
MINIMIZE = "minimize"

_SIGN_CHARS = (PLUS, MINUS)
_CONVEX_INT = tuple(int(c) for c in CONVEX)
_MIRROR = str.maketrans(PLUS + MINUS, MINUS + PLUS)
_INFINITY = 1 << 60


class BudgetExceeded(Exception):
    """Internal unwind signal when a node or wall-clock budget is hit."""


@dataclass(frozen=True)
class SearchConfig:
    """Parameters shared by enumeration and minimization runs.

    ``prefix`` (a SignatureFunction on m <= n vertices, or its sign string)
    restricts the run to extensions of that assignment.  ``best_bound``
    seeds the incumbent for minimization; it must be attainable (for
    example the crossing count of a known drawing), otherwise the run
    reports no minima.  Node and wall-clock budgets make the run stop
    early with ``complete=False``.
    """

    n: int
    level: str = SIMPLE
    mode: str = ENUMERATE_ALL
    best_bound: Optional[int] = None
    prefix: Optional[str | SignatureFunction] = None
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    symmetry_reduction: bool = True

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.level not in LEVELS:
            raise ValueError(f"unknown level {self.level!r}; pick one of {LEVELS}")
        if self.mode not in (ENUMERATE_ALL, MINIMIZE):
            raise ValueError(f"unknown mode {self.mode!r}")

    def prefix_signs(self) -> Optional[str]:
        if self.prefix is None:
            return None
        signs = (
            self.prefix.signs
            if isinstance(self.prefix, SignatureFunction)
            else self.prefix
        )
        m = _infer_prefix_m(signs)
        if m > self.n:
            raise ValueError(f"prefix on {m} vertices does not fit n={self.n}")
        return signs


def _infer_prefix_m(signs: str) -> int:
    for m in range(0, 64):
        if comb(m, 3) == len(signs):
            return max(m, 2)
        if comb(m, 3) > len(signs):
            break
    raise ValueError(f"prefix length {len(signs)} is not C(m,3) for any m")


# --- constraint tables -----------------------------------------------------


@lru_cache(maxsize=None)
def _tables(n: int, level: str):
    """Per-position check lists for the vertex-incremental assignment order.

    Returns (position_triples, position_ranks, quad_checks, five_checks).
    quad_checks[t] lists (r1, r2, r3): the ranks of the first three triples
    of each 4-tuple completed by position t (the current sign is the
    fourth).  five_checks[t] lists (r_abe, r_ace, r_bcd) for each 5-tuple
    pattern completed by position t = (a, d, e).
    """
    pos_triples: list[tuple[int, int, int]] = []
    for m in range(3, n + 1):
        for i, j in combinations(range(1, m), 2):
            pos_triples.append((i, j, m))
    pos_ranks = tuple(triple_rank(n, *t) for t in pos_triples)
    quad_checks = []
    five_checks = []
    for i, j, m in pos_triples:
        quad_checks.append(
            tuple(
                (
                    triple_rank(n, a, i, j),
                    triple_rank(n, a, i, m),
                    triple_rank(n, a, j, m),
                )
                for a in range(1, i)
            )
        )
        if level == SIMPLE:
            five_checks.append(
                tuple(
                    (
                        triple_rank(n, i, b, m),
                        triple_rank(n, i, c, m),
                        triple_rank(n, b, c, j),
                    )
                    for b in range(i + 1, j - 1)
                    for c in range(b + 1, j)
                )
            )
        else:
            five_checks.append(())
    return tuple(pos_triples), pos_ranks, tuple(quad_checks), tuple(five_checks)


def _forbidden_table(level: str) -> tuple[bool, ...]:
    ok = PSEUDOLINEAR_OK if level == PSEUDOLINEAR else SEMISIMPLE_OK
    return tuple(not v for v in ok)


# --- DFS engine ------------------------------------------------------------


def _run_search(
    n: int,
    level: str,
    visitor: Callable[[list[int], int], None],
    *,
    incumbent=None,
    fix_first: bool = False,
    prefix_signs: Optional[str] = None,
    max_nodes: Optional[int] = None,
    max_seconds: Optional[float] = None,
) -> tuple[int, bool]:
    """Drive the DFS; ``visitor(signs, convex_count)`` fires per valid leaf.

    ``signs`` is the working array (0 = '+', 1 = '-') indexed by triple
    rank; visitors must copy what they keep.  Returns (nodes, complete).
    """
    total = comb(n, 3)
    signs = [0] * total
    if total == 0:
        visitor(signs, 0)
        return 0, True
    pos_triples, pos_ranks, quad_checks, five_checks = _tables(n, level)
    forbidden = _forbidden_table(level)
    convex = _CONVEX_INT
    nodes = 0
    deadline = None if max_seconds is None else time.monotonic() + max_seconds

    start = 0
    start_count = 0
    if prefix_signs:
        m = _infer_prefix_m(prefix_signs)
        start = comb(m, 3)
        ptab = {t: int(ch == MINUS) for t, ch in zip(triples(m), prefix_signs)}
        for t in range(start):
            s = ptab[pos_triples[t]]
            for r1, r2, r3 in quad_checks[t]:
                form = signs[r1] * 8 + signs[r2] * 4 + signs[r3] * 2 + s
                if forbidden[form]:
                    return 0, True  # invalid prefix: empty subtree
                start_count += convex[form]
            for r1, r2, r3 in five_checks[t]:
                if signs[r1] == s and signs[r3] == s and signs[r2] != s:
                    return 0, True
            signs[pos_ranks[t]] = s

    def rec(t: int, count: int) -> None:
        nonlocal nodes
        if t == total:
            visitor(signs, count)
            return
        quads = quad_checks[t]
        fives = five_checks[t]
        rank = pos_ranks[t]
        choices = (0,) if (t == 0 and fix_first) else (0, 1)
        for s in choices:
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise BudgetExceeded
            if deadline is not None and nodes % 8192 == 0 and time.monotonic() > deadline:
                raise BudgetExceeded
            delta = 0
            ok = True
            for r1, r2, r3 in quads:
                form = signs[r1] * 8 + signs[r2] * 4 + signs[r3] * 2 + s
                if forbidden[form]:
                    ok = False
                    break
                delta += convex[form]
            if not ok:
                continue
            if fives:
                for r1, r2, r3 in fives:
                    if signs[r1] == s and signs[r3] == s and signs[r2] != s:
                        ok = False
                        break
                if not ok:
                    continue
            new_count = count + delta
            if incumbent is not None and new_count > incumbent[0]:
                continue
            signs[rank] = s
            rec(t + 1, new_count)

    complete = True
    try:
        rec(start, start_count)
    except BudgetExceeded:
        complete = False
    return nodes, complete


def signs_to_string(signs: Sequence[int]) -> str:
    return "".join(_SIGN_CHARS[v] for v in signs)


def mirror_signs(signs: str) -> str:
    """Sign string of the vertical reflection (global negation)."""
    return signs.translate(_MIRROR)


# --- enumeration -----------------------------------------------------------


@dataclass(frozen=True)
class EnumerationStats:
    count: int
    nodes_visited: int
    complete: bool
    elapsed_seconds: float


def enumerate_valid(
    config: SearchConfig,
    visitor: Optional[Callable[[SignatureFunction], None]] = None,
) -> EnumerationStats:
    """Visit every valid signature exactly once (modulo prefix and budgets)."""
    t0 = time.monotonic()
    count = 0
    n = config.n

    def leaf(signs: list[int], _count: int) -> None:
        nonlocal count
        count += 1
        if visitor is not None:
            visitor(SignatureFunction(n, signs_to_string(signs)))

    nodes, complete = _run_search(
        n,
        config.level,
        leaf,
        prefix_signs=config.prefix_signs(),
        max_nodes=config.max_nodes,
        max_seconds=config.max_seconds,
    )
    return EnumerationStats(count, nodes, complete, time.monotonic() - t0)


def count_valid(n: int, level: str) -> int:
    return enumerate_valid(SearchConfig(n=n, level=level)).count


# --- minimization ----------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a crossing-minimization run.

    When ``complete`` is true, ``minimum`` is the exact minimum over the
    whole space and ``minimal_signatures`` lists every signature attaining
    it (lexicographically sorted).  ``class_count`` counts switching
    equivalence classes among the minima.
    """

    n: int
    level: str
    minimum: Optional[int]
    minimal_signatures: tuple[str, ...]
    class_count: int
    class_representatives: tuple[str, ...]
    nodes_visited: int
    complete: bool
    elapsed_seconds: float

    def minimal(self) -> tuple[SignatureFunction, ...]:
        return tuple(SignatureFunction(self.n, s) for s in self.minimal_signatures)


class _Collector:
    """Incumbent box plus the running set of minima."""

    __slots__ = ("best", "minima")

    def __init__(self, seed: Optional[int]) -> None:
        self.best = [seed if seed is not None else _INFINITY]
        self.minima: list[str] = []

    def leaf(self, signs: list[int], count: int) -> None:
        if count < self.best[0]:
            self.best[0] = count
            self.minima.clear()
        if count == self.best[0]:
            self.minima.append(signs_to_string(signs))


def _finish_result(
    config: SearchConfig,
    minima: list[str],
    best: int,
    nodes: int,
    complete: bool,
    t0: float,
    mirrored: bool,
) -> SearchResult:
    found = sorted(set(minima))
    if mirrored and found:
        found = sorted(set(found) | {mirror_signs(s) for s in found})
    if not found:
        return SearchResult(
            config.n, config.level, None, (), 0, (), nodes, complete,
            time.monotonic() - t0,
        )
    sigmas = [SignatureFunction(config.n, s) for s in found]
    canon = transform.canonical_map(sigmas)
    reps = tuple(sorted(set(canon.values())))
    return SearchResult(
        n=config.n,
        level=config.level,
        minimum=best,
        minimal_signatures=tuple(found),
        class_count=len(reps),
        class_representatives=reps,
        nodes_visited=nodes,
        complete=complete,
        elapsed_seconds=time.monotonic() - t0,
    )


def min_crossing_search(
    config: SearchConfig,
    *,
    threads: int = 1,
    shard_m: Optional[int] = None,
    checkpoint_path: Optional[str] = None,
    resume: bool = False,
) -> SearchResult:
    """Branch-and-bound search for the minimum convex 4-tuple count.

    With ``symmetry_reduction`` the first sign is fixed to '+' and the
    mirror of each minimum is added back afterwards (global negation
    preserves validity and the count).  Sharded and multi-process runs
    return the same minima as sequential ones; only node counts may vary
    when an incumbent is shared across processes.
    """
    if config.mode != MINIMIZE:
        config = replace(config, mode=MINIMIZE)
    t0 = time.monotonic()
    sharded = checkpoint_path or resume or threads > 1 or shard_m is not None
    if sharded and config.n >= 3:
        if config.prefix is not None:
            raise ValueError("prefix and sharding are mutually exclusive")
        return _min_search_sharded(
            config, threads=threads, shard_m=shard_m,
            checkpoint_path=checkpoint_path, resume=resume, t0=t0,
        )
    use_symmetry = (
        config.symmetry_reduction and comb(config.n, 3) > 0 and config.prefix is None
    )
    collector = _Collector(config.best_bound)
    nodes, complete = _run_search(
        config.n,
        config.level,
        collector.leaf,
        incumbent=collector.best,
        fix_first=use_symmetry,
        prefix_signs=config.prefix_signs(),
        max_nodes=config.max_nodes,
        max_seconds=config.max_seconds,
    )
    return _finish_result(
        config, collector.minima, collector.best[0], nodes, complete, t0, use_symmetry
    )


def shard_prefixes(n: int, level: str, shard_m: int, *, fix_first: bool) -> list[str]:
    """All valid signatures on [shard_m], as subtree prefixes, in lex order."""
    if not 3 <= shard_m <= n:
        raise ValueError(f"shard_m must be in [3, {n}]")
    out: list[str] = []

    def leaf(signs: list[int], _count: int) -> None:
        out.append(signs_to_string(signs))

    _run_search(shard_m, level, leaf, fix_first=fix_first)
    return sorted(out)


class _SharedBox:
    """Incumbent view merging a process-shared bound with the local one.

    Readers may observe a stale shared value; that only weakens pruning,
    never correctness.
    """

    __slots__ = ("shared", "collector")

    def __init__(self, shared, collector: _Collector) -> None:
        self.shared = shared
        self.collector = collector

    def __getitem__(self, _idx: int) -> int:
        s = self.shared.value
        local = self.collector.best[0]
        return s if s < local else local

    def leaf(self, signs: list[int], count: int) -> None:
        self.collector.leaf(signs, count)
        if count < self.shared.value:
            with self.shared.get_lock():
                if count < self.shared.value:
                    self.shared.value = count


_SHARED_INCUMBENT: dict = {}


def _init_worker(shared) -> None:
    _SHARED_INCUMBENT["value"] = shared


def _minimize_shard(args) -> tuple[Optional[int], list[str], int, bool]:
    """Worker body: minimize within one prefix subtree."""
    n, level, prefix, seed = args
    shared = _SHARED_INCUMBENT.get("value")
    collector = _Collector(seed)
    if shared is None:
        nodes, complete = _run_search(
            n, level, collector.leaf, incumbent=collector.best, prefix_signs=prefix
        )
    else:
        box = _SharedBox(shared, collector)
        nodes, complete = _run_search(
            n, level, box.leaf, incumbent=box, prefix_signs=prefix
        )
    best = collector.best[0]
    return (best if collector.minima else None, collector.minima, nodes, complete)


def _min_search_sharded(
    config: SearchConfig,
    *,
    threads: int,
    shard_m: Optional[int],
    checkpoint_path: Optional[str],
    resume: bool,
    t0: float,
) -> SearchResult:
    n, level = config.n, config.level
    use_symmetry = config.symmetry_reduction
    if resume:
        if not checkpoint_path or not os.path.exists(checkpoint_path):
            raise ValueError("resume requires an existing checkpoint file")
        state = load_checkpoint(checkpoint_path)
        if state.n != n or state.level != level:
            raise ValueError("checkpoint does not match this configuration")
        pending = list(state.pending)
        minima = list(state.minima)
        best = state.incumbent
        shard_m = state.shard_m
        use_symmetry = state.symmetry
        nodes = state.nodes
    else:
        if shard_m is None:
            shard_m = 5 if n > 5 else 3
        shard_m = min(shard_m, n)
        pending = shard_prefixes(n, level, shard_m, fix_first=use_symmetry)
        minima = []
        best = config.best_bound if config.best_bound is not None else _INFINITY
        nodes = 0
    complete = True

    def absorb(result, prefix: str) -> None:
        nonlocal best, minima, nodes, complete
        shard_best, shard_minima, shard_nodes, shard_complete = result
        nodes += shard_nodes
        if not shard_complete:
            complete = False
        if shard_best is not None:
            if shard_best < best:
                best = shard_best
                minima = []
            if shard_best == best:
                minima.extend(shard_minima)
        pending.remove(prefix)
        if checkpoint_path:
            save_checkpoint(
                checkpoint_path,
                CheckpointState(
                    n, level, shard_m, use_symmetry, best,
                    tuple(sorted(set(minima))), tuple(pending), nodes,
                ),
            )

    batch = list(pending)
    if threads <= 1:
        for prefix in batch:
            absorb(_minimize_shard((n, level, prefix, best)), prefix)
    else:
        seed = None if best >= _INFINITY else best
        shared = multiprocessing.Value("q", best, lock=True)
        with multiprocessing.Pool(
            threads, initializer=_init_worker, initargs=(shared,)
        ) as pool:
            args = [(n, level, p, seed) for p in batch]
            for prefix, result in zip(batch, pool.imap(_minimize_shard, args)):
                absorb(result, prefix)
    return _finish_result(
        config, minima, best, nodes, complete, t0, mirrored=use_symmetry
    )


# --- checkpoints -----------------------------------------------------------


@dataclass(frozen=True)
class CheckpointState:
    n: int
    level: str
    shard_m: int
    symmetry: bool
    incumbent: int
    minima: tuple[str, ...]
    pending: tuple[str, ...]
    nodes: int


def save_checkpoint(path: str, state: CheckpointState) -> None:
    lines = [
        "ckpt v1",
        f"n {state.n}",
        f"level {state.level}",
        f"shard_m {state.shard_m}",
        f"symmetry {int(state.symmetry)}",
        f"incumbent {state.incumbent}",
        f"nodes {state.nodes}",
        f"minima {len(state.minima)}",
        *state.minima,
        f"pending {len(state.pending)}",
        *state.pending,
    ]
    tmp = path + ".tmp"
    with open(tmp, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, path)


def load_checkpoint(path: str) -> CheckpointState:
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != "ckpt v1":
        raise ValueError("not a ckpt v1 file")
    fields = {}
    idx = 1
    for key in ("n", "level", "shard_m", "symmetry", "incumbent", "nodes"):
        name, _, value = lines[idx].partition(" ")
        if name != key:
            raise ValueError(f"expected {key!r} line, got {lines[idx]!r}")
        fields[key] = value
        idx += 1
    n_minima = int(lines[idx].split()[1])
    idx += 1
    minima = tuple(lines[idx : idx + n_minima])
    idx += n_minima
    n_pending = int(lines[idx].split()[1])
    idx += 1
    pending = tuple(lines[idx : idx + n_pending])
    return CheckpointState(
        n=int(fields["n"]),
        level=fields["level"],
        shard_m=int(fields["shard_m"]),
        symmetry=bool(int(fields["symmetry"])),
        incumbent=int(fields["incumbent"]),
        minima=minima,
        pending=pending,
        nodes=int(fields["nodes"]),
    )


# --- minimal classes -------------------------------------------------------


def minimal_classes(result: SearchResult) -> list[list[SignatureFunction]]:
    """Group the minima of a search result by switching class.

    Classes are sorted by their canonical representative; members are
    sorted lexicographically.
    """
    sigmas = list(result.minimal())
    canon = transform.canonical_map(sigmas)
    groups: dict[str, list[SignatureFunction]] = {}
    for sig in sigmas:
        groups.setdefault(canon[sig.signs], []).append(sig)
    return [sorted(groups[rep], key=lambda s: s.signs) for rep in sorted(groups)]


# --- k-edge bound sweeps ---------------------------------------------------


@lru_cache(maxsize=None)
def _edge_side_tables(n: int):
    """Per edge (i,k): ranks where '+' marks a left vertex, and where '-' does."""
    plus_tables = []
    minus_tables = []
    edges = list(combinations(range(1, n + 1), 2))
    for i, k in edges:
        plus: list[int] = []
        minus: list[int] = []
        for w in range(1, i):
            plus.append(triple_rank(n, w, i, k))
        for w in range(i + 1, k):
            minus.append(triple_rank(n, i, w, k))
        for w in range(k + 1, n + 1):
            plus.append(triple_rank(n, i, k, w))
        plus_tables.append(tuple(plus))
        minus_tables.append(tuple(minus))
    return tuple(edges), tuple(plus_tables), tuple(minus_tables)


def ek_from_signs(n: int, signs: Sequence[int]) -> list[int]:
    """k-edge counts straight off a raw 0/1 sign array (no validation)."""
    edges, plus_tables, minus_tables = _edge_side_tables(n)
    half = n // 2
    e_k = [0] * max(half, 1)
    for idx in range(len(edges)):
        left = sum(1 - signs[r] for r in plus_tables[idx]) + sum(
            signs[r] for r in minus_tables[idx]
        )
        e_k[min(left, n - 2 - left)] += 1
    return e_k[:half]


@dataclass(frozen=True)
class BoundReport:
    """Outcome of an exhaustive lower-bound sweep over valid signatures.

    ``min_slack[k]`` is the smallest observed value of (cumulative count at
    k) minus (bound at k); non-negative slack everywhere means no violation.
    """

    n: int
    level: str
    quantity: str
    ks: tuple[int, ...]
    bounds: tuple[int, ...]
    min_slack: tuple[Optional[int], ...]
    violations: tuple[tuple[str, int], ...]
    signatures_checked: int
    nodes_visited: int
    complete: bool

    @property
    def ok(self) -> bool:
        return not self.violations


def _bound_ks(n: int) -> tuple[int, ...]:
    return tuple(k for k in range(max(n // 2, 1)) if 2 * k < n - 2)


def verify_lele_bound(
    n: int, *, max_nodes: Optional[int] = None, max_seconds: Optional[float] = None
) -> BoundReport:
    """Check lele[k] >= 3 C(k+3,3) over every semisimple-valid signature."""
    return _bound_sweep(n, SEMISIMPLE, "lele", 2, 3, max_nodes, max_seconds)


def verify_lelele_conjecture(
    n: int, *, max_nodes: Optional[int] = None, max_seconds: Optional[float] = None
) -> BoundReport:
    """Check lelele[k] >= 3 C(k+4,4) over every simple-valid signature."""
    return _bound_sweep(n, SIMPLE, "lelele", 3, 4, max_nodes, max_seconds)


def _bound_sweep(
    n: int,
    level: str,
    quantity: str,
    cumulate: int,
    binom_k: int,
    max_nodes: Optional[int],
    max_seconds: Optional[float],
) -> BoundReport:
    ks = _bound_ks(n)
    bounds = tuple(3 * comb(k + binom_k, binom_k) for k in ks)
    min_slack: list[Optional[int]] = [None] * len(ks)
    violations: list[tuple[str, int]] = []
    checked = 0

    def leaf(signs: list[int], _count: int) -> None:
        nonlocal checked
        checked += 1
        acc = ek_from_signs(n, signs)
        for _ in range(cumulate):
            run = 0
            for idx in range(len(acc)):
                run += acc[idx]
                acc[idx] = run
        for pos, k in enumerate(ks):
            slack = acc[k] - bounds[pos]
            if min_slack[pos] is None or slack < min_slack[pos]:
                min_slack[pos] = slack
            if slack < 0:
                violations.append((signs_to_string(signs), k))

    nodes, complete = _run_search(
        n, level, leaf, max_nodes=max_nodes, max_seconds=max_seconds
    )
    return BoundReport(
        n=n,
        level=level,
        quantity=quantity,
        ks=ks,
        bounds=bounds,
        min_slack=tuple(min_slack),
        violations=tuple(violations),
        signatures_checked=checked,
        nodes_visited=nodes,
        complete=complete,
    )


# --- sampling --------------------------------------------------------------


def random_valid_signature(n: int, level: str, rng: Random) -> SignatureFunction:
    """One valid signature drawn by a randomized DFS (order-biased, not uniform)."""
    total = comb(n, 3)
    signs = [0] * total
    if total == 0:
        return SignatureFunction(n, "")
    _, pos_ranks, quad_checks, five_checks = _tables(n, level)
    forbidden = _forbidden_table(level)

    def rec(t: int) -> bool:
        if t == total:
            return True
        order = (0, 1) if rng.random() < 0.5 else (1, 0)
        for s in order:
            ok = True
            for r1, r2, r3 in quad_checks[t]:
                if forbidden[signs[r1] * 8 + signs[r2] * 4 + signs[r3] * 2 + s]:
                    ok = False
                    break
            if ok:
                for r1, r2, r3 in five_checks[t]:
                    if signs[r1] == s and signs[r3] == s and signs[r2] != s:
                        ok = False
                        break
            if not ok:
                continue
            signs[pos_ranks[t]] = s
            if rec(t + 1):
                return True
        return False

    found = rec(0)
    # The all-'+' signature is valid at every level, so the DFS always lands.
    assert found
    return SignatureFunction(n, signs_to_string(signs))
