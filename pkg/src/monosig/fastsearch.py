"""Optional JIT-compiled minimization engine for long runs.

A numba twin of the pure-Python branch-and-bound in ``search``: identical
tables, identical tree, identical pruning, iterative instead of recursive.
The two engines visit bit-for-bit the same nodes and return the same
minima; the tests assert exact agreement including node counts.  Use this
one for the gated n >= 9 reproductions, where it is fifty-odd times
faster (the 9-vertex space, 26 billion nodes, takes minutes instead of a
day, and yields 510 switching classes among 180188 minima).

numba is imported lazily so the rest of the package works without it.

Unlike the pure engine this path has no budgets, prefixes, or
checkpoints: it always runs a space to exhaustion, in one process.
Classes among the minima are grouped by union-find over operation images;
every image must itself be a found minimum (the operations preserve
validity and the crossing count), and any stray image raises rather than
being silently reconciled.
"""

from __future__ import annotations

import time
from math import comb

from . import transform
from .search import (
    MINIMIZE,
    SearchConfig,
    SearchResult,
    _CONVEX_INT,
    _INFINITY,
    _forbidden_table,
    _tables,
    mirror_signs,
)
from .sigcore import MINUS, PLUS, SignatureFunction


def _kernel():
    import numpy as np
    from numba import njit

    @njit(cache=True)
    def dfs_minimize(total, ranks, qoff, qdat, foff, fdat, forbidden, convex,
                     seed_bound, fix_first, minima_buf):
        signs = np.zeros(total, dtype=np.int8)
        counts = np.zeros(total + 1, dtype=np.int64)
        state = np.zeros(total, dtype=np.int8)  # next sign to try per level
        best = seed_bound
        n_min = 0
        nodes = 0
        overflow = False
        cap = minima_buf.shape[0]
        t = 0
        while t >= 0:
            if t == total:
                c = counts[t]
                if c < best:
                    best = c
                    n_min = 0
                if c == best:
                    if n_min < cap:
                        for idx in range(total):
                            minima_buf[n_min, idx] = signs[idx]
                    else:
                        overflow = True
                    n_min += 1
                t -= 1
                continue
            s = state[t]
            limit = 1 if (t == 0 and fix_first) else 2
            if s >= limit:
                state[t] = 0
                t -= 1
                continue
            state[t] = s + 1
            nodes += 1
            delta = 0
            ok = True
            for q in range(qoff[t], qoff[t + 1]):
                form = (signs[qdat[q, 0]] * 8 + signs[qdat[q, 1]] * 4
                        + signs[qdat[q, 2]] * 2 + s)
                if forbidden[form]:
                    ok = False
                    break
                delta += convex[form]
            if ok:
                for f in range(foff[t], foff[t + 1]):
                    if (signs[fdat[f, 0]] == s and signs[fdat[f, 2]] == s
                            and signs[fdat[f, 1]] != s):
                        ok = False
                        break
            if not ok:
                continue
            new_count = counts[t] + delta
            if new_count > best:
                continue
            signs[ranks[t]] = s
            counts[t + 1] = new_count
            t += 1
        return best, n_min, nodes, overflow

    return np, dfs_minimize


def _build_arrays(np, n: int, level: str):
    _, pos_ranks, quad_checks, five_checks = _tables(n, level)
    total = comb(n, 3)
    qoff = np.zeros(total + 1, dtype=np.int32)
    foff = np.zeros(total + 1, dtype=np.int32)
    qdat: list[int] = []
    fdat: list[int] = []
    for t in range(total):
        for tri in quad_checks[t]:
            qdat.extend(tri)
        qoff[t + 1] = len(qdat) // 3
        for tri in five_checks[t]:
            fdat.extend(tri)
        foff[t + 1] = len(fdat) // 3
    return (
        total,
        np.array(pos_ranks, dtype=np.int32),
        qoff,
        np.array(qdat, dtype=np.int32).reshape(-1, 3)
        if qdat else np.zeros((0, 3), np.int32),
        foff,
        np.array(fdat, dtype=np.int32).reshape(-1, 3)
        if fdat else np.zeros((0, 3), np.int32),
        np.array([1 if v else 0 for v in _forbidden_table(level)], dtype=np.uint8),
        np.array(_CONVEX_INT, dtype=np.uint8),
    )


def group_minima_strings(n: int, minima: list[str]) -> list[list[str]]:
    """Partition a complete minima set into switching classes.

    Union-find over operation images; membership of every image in the set
    certifies that the operations preserved validity and the count.  A
    stray image is an inconsistency and raises.
    """
    index = {s: i for i, s in enumerate(minima)}
    parent = list(range(len(minima)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ops = transform.all_ops(n)
    for s in minima:
        sigma = SignatureFunction(n, s)
        i = index[s]
        for op in ops:
            if not transform.applicable(sigma, op):
                continue
            image = transform.apply_op(sigma, op).signs
            j = index.get(image)
            if j is None:
                raise RuntimeError(
                    f"operation {op} maps a minimum outside the minima set: "
                    f"{s} -> {image}; the operation definitions need review"
                )
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[rj] = ri
    groups: dict[int, list[str]] = {}
    for s, i in index.items():
        groups.setdefault(find(i), []).append(s)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def min_crossing_search_fast(
    config: SearchConfig, *, minima_cap: int = 4_000_000
) -> SearchResult:
    """Exhaustive crossing minimization on the JIT engine.

    Returns the same SearchResult a complete pure-engine run produces.
    Budgets, prefixes, and checkpoints are not supported here; numba must
    be importable.
    """
    if config.prefix is not None or config.max_nodes or config.max_seconds:
        raise ValueError("the fast engine supports neither prefixes nor budgets")
    if config.mode != MINIMIZE:
        from dataclasses import replace

        config = replace(config, mode=MINIMIZE)
    t0 = time.monotonic()
    np, dfs = _kernel()
    n, level = config.n, config.level
    total = comb(n, 3)
    arrays = _build_arrays(np, n, level)
    fix_first = config.symmetry_reduction and total > 0
    seed = config.best_bound if config.best_bound is not None else _INFINITY
    buf = np.zeros((minima_cap if total else 1, max(total, 1)), dtype=np.int8)
    best, n_min, nodes, overflow = dfs(*arrays, seed, fix_first, buf)
    if overflow:
        raise RuntimeError(f"more than {minima_cap} minima; raise minima_cap")
    chars = np.array([ord(PLUS), ord(MINUS)], dtype=np.uint8)
    half = [chars[buf[i, :total]].tobytes().decode() for i in range(n_min)]
    if not half:
        return SearchResult(n, level, None, (), 0, (), nodes, True,
                            time.monotonic() - t0)
    found = sorted(set(half) | {mirror_signs(s) for s in half}) if fix_first \
        else sorted(set(half))
    groups = group_minima_strings(n, found)
    reps = tuple(g[0] for g in groups)
    return SearchResult(
        n=n,
        level=level,
        minimum=best,
        minimal_signatures=tuple(found),
        class_count=len(groups),
        class_representatives=reps,
        nodes_visited=nodes,
        complete=True,
        elapsed_seconds=time.monotonic() - t0,
    )
