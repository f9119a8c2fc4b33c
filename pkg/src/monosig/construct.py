"""Realize a semisimple-valid signature as an explicit x-monotone drawing.

Vertices are placed at (i, 0).  Edges become polylines bent on a fixed grid:
one bend in the middle of each vertical slab between consecutive vertices
(x = m - 1/2) and one on each vertex line they pass (x = m).  All geometry
is therefore dyadic and exact.

The drawing is determined by one total order per slab: the bottom-to-top
order of the edges alive there.  Each order is built by a left-to-right
sweep.  Writing sign(i, m, j) = '-' when the edge (i, j) passes below
vertex v_m ('+' when above), the order for the slab left of v_m is the
concatenation, bottom to top, of

    1. edges below both v_{m-1} and v_m,
    2. edges starting at v_{m-1} that go below v_m,
    3. edges from above v_{m-1} descending below v_m,
    4. edges ending at v_m (see below),
    5. edges from below v_{m-1} ascending above v_m,
    6. edges starting at v_{m-1} that go above v_m,
    7. edges above both v_{m-1} and v_m,

where blocks 1, 3, 5, 7 keep their previous slab order and blocks 2, 6 are
ordered by the fan order at v_{m-1} (edge (i,j) below (i,k) near v_i when
j < k and sign(i,j,k) = '+', or k < j and sign(i,k,j) = '-').

Edges ending at v_m converge to the same point, so they may never cross
each other or change their approach order: block 4 keeps the previous slab
order of the enders, with the edge (v_{m-1}, v_m) slotted at the vertex
line's own level, between the enders arriving from below and from above.

Crossings are counted combinatorially, never by floating-point geometry:
between two consecutive sampled verticals every edge is a straight segment,
so two edges cross exactly when their vertical order inverts; edges tied at
y = 0 on a vertex line meet at that vertex and do not cross there.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Iterator, Optional

from .sigcore import MINUS, PLUS, SignatureFunction
from .stats import require_semisimple

Edge = tuple[int, int]
Point = tuple[float, float]


@dataclass
class Drawing:
    """A realized x-monotone polyline drawing of K_n.

    ``slab_orders[m]`` (2 <= m <= n) is the bottom-to-top order of the
    edges (i, j) with i < m <= j in the slab left of v_m.
    ``at_vertex_orders[m]`` holds the bottom-to-top (below, above) groups
    of edges passing v_m.  Treat instances as immutable once built.
    """

    n: int
    vertices: tuple[Point, ...]
    slab_orders: dict[int, tuple[Edge, ...]]
    at_vertex_orders: dict[int, tuple[tuple[Edge, ...], tuple[Edge, ...]]]
    polylines: dict[Edge, tuple[Point, ...]]

    def edges(self) -> Iterator[Edge]:
        return iter(sorted(self.polylines))


def _fan_order(sigma: SignatureFunction, i: int) -> list[Edge]:
    """Right edges at v_i, bottom to top in a small neighborhood of v_i."""
    n = sigma.n

    def below(e: Edge, f: Edge) -> int:
        j, k = e[1], f[1]
        if j == k:
            return 0
        if j < k:
            return -1 if sigma.sign(i, j, k) == PLUS else 1
        return -1 if sigma.sign(i, k, j) == MINUS else 1

    return sorted(((i, j) for j in range(i + 1, n + 1)), key=cmp_to_key(below))


def _slab_orders(sigma: SignatureFunction) -> dict[int, list[Edge]]:
    n = sigma.n
    orders: dict[int, list[Edge]] = {}
    if n < 2:
        return orders
    orders[2] = _fan_order(sigma, 1)
    for m in range(3, n + 1):
        prev = orders[m - 1]
        s1: list[Edge] = []
        s3: list[Edge] = []
        s4: list[Edge] = []
        s6: list[Edge] = []
        enders_below: list[Edge] = []
        enders_above: list[Edge] = []
        for e in prev:
            i, j = e
            if j == m - 1:
                continue  # ended at the previous vertex
            if j == m:
                side = sigma.sign(i, m - 1, m)
                (enders_below if side == MINUS else enders_above).append(e)
                continue
            at_prev = sigma.sign(i, m - 1, j)
            at_cur = sigma.sign(i, m, j)
            if at_prev == MINUS:
                (s1 if at_cur == MINUS else s4).append(e)
            else:
                (s3 if at_cur == MINUS else s6).append(e)
        s2: list[Edge] = []
        s5: list[Edge] = []
        mid: list[Edge] = []
        for e in _fan_order(sigma, m - 1):
            j = e[1]
            if j == m:
                mid.append(e)
            elif sigma.sign(m - 1, m, j) == MINUS:
                s2.append(e)
            else:
                s5.append(e)
        orders[m] = (
            s1 + s2 + s3 + enders_below + mid + enders_above + s4 + s5 + s6
        )
    return orders


def realize(sigma: SignatureFunction) -> Drawing:
    """Build the sweep drawing of a semisimple-valid signature.

    The result realizes the signature (vertex j sits above edge (i, k)
    exactly when sign(i, j, k) = '-') and has no adjacent crossings; for
    simple-valid signatures its crossing count is the convex 4-tuple count.
    """
    require_semisimple(sigma)
    n = sigma.n
    orders = _slab_orders(sigma)
    at_vertex: dict[int, tuple[tuple[Edge, ...], tuple[Edge, ...]]] = {}
    for m in range(1, n + 1):
        if m < 2 or m == n:
            at_vertex[m] = ((), ())
            continue
        order = orders[m]
        below = tuple(
            (i, j) for i, j in order if i < m < j and sigma.sign(i, m, j) == MINUS
        )
        above = tuple(
            (i, j) for i, j in order if i < m < j and sigma.sign(i, m, j) == PLUS
        )
        at_vertex[m] = (below, above)

    # The at-vertex groups are order-filters of the slab order (an edge
    # cannot jump over a same-side edge while passing the vertex), which
    # holds by the filtering above.  Two edges passing v_m on the same side
    # may still swap between the two slabs around v_m; that crossing lies
    # beside the vertex line and is counted in the slab where it happens.

    vert_y: dict[int, dict[Edge, int]] = {}
    for m in range(1, n + 1):
        below, above = at_vertex[m]
        ys: dict[Edge, int] = {}
        for idx, e in enumerate(below):
            ys[e] = idx - len(below)
        for idx, e in enumerate(above):
            ys[e] = idx + 1
        vert_y[m] = ys

    mid_y: dict[int, dict[Edge, float]] = {}
    for m, order in orders.items():
        length = len(order)
        mid_y[m] = {e: (idx + 1) - (length + 1) / 2 for idx, e in enumerate(order)}

    polylines: dict[Edge, tuple[Point, ...]] = {}
    for i, j in combinations(range(1, n + 1), 2):
        pts: list[Point] = [(float(i), 0.0)]
        for m in range(i + 1, j + 1):
            pts.append((m - 0.5, mid_y[m][(i, j)]))
            if m < j:
                pts.append((float(m), float(vert_y[m][(i, j)])))
        pts.append((float(j), 0.0))
        polylines[(i, j)] = tuple(pts)

    return Drawing(
        n=n,
        vertices=tuple((float(i), 0.0) for i in range(1, n + 1)),
        slab_orders={m: tuple(o) for m, o in orders.items()},
        at_vertex_orders=at_vertex,
        polylines=polylines,
    )


# --- combinatorial crossing oracle ------------------------------------------


@dataclass(frozen=True)
class CrossingReport:
    """Inversion-counted crossings of a drawing.

    ``total_crossings`` sums, over consecutive sampled verticals, the
    number of edge pairs whose vertical order inverts.
    ``adjacent_pairs_crossing`` lists inverted pairs sharing an endpoint
    (empty for drawings built by ``realize``).  ``per_pair_parity`` maps
    each independent edge pair to its crossing-count parity.
    """

    total_crossings: int
    adjacent_pairs_crossing: tuple[tuple[Edge, Edge], ...]
    per_pair_parity: dict[tuple[Edge, Edge], int]


def _sample_xs(n: int) -> list[float]:
    xs: list[float] = []
    for m in range(1, n + 1):
        xs.append(float(m))
        if m < n:
            xs.append(m + 0.5)
    return xs


def _sample_columns(d: Drawing) -> list[dict[Edge, float]]:
    """Edge y-positions at each sampled vertical, read off the polylines."""
    columns: dict[float, dict[Edge, float]] = {x: {} for x in _sample_xs(d.n)}
    for edge, pts in d.polylines.items():
        for x, y in pts:
            col = columns.get(x)
            if col is None:
                raise ValueError(f"polyline point of {edge} off the grid: x={x}")
            if edge in col:
                raise ValueError(f"duplicate point of {edge} at x={x}")
            col[edge] = y
    return [columns[x] for x in sorted(columns)]


def drawing_crossings(d: Drawing) -> CrossingReport:
    """Count crossings by order inversions between consecutive verticals.

    Edges tied at y = 0 on a vertex line meet at that vertex; ties never
    count as inversions.
    """
    columns = _sample_columns(d)
    total = 0
    adjacent: list[tuple[Edge, Edge]] = []
    pair_counts: dict[tuple[Edge, Edge], int] = {}
    for left, right in zip(columns, columns[1:]):
        common = sorted(set(left) & set(right))
        for e, f in combinations(common, 2):
            if (left[e] - left[f]) * (right[e] - right[f]) < 0:
                total += 1
                pair = (e, f)
                if set(e) & set(f):
                    adjacent.append(pair)
                else:
                    pair_counts[pair] = pair_counts.get(pair, 0) + 1
    parity = {pair: count % 2 for pair, count in pair_counts.items()}
    return CrossingReport(
        total_crossings=total,
        adjacent_pairs_crossing=tuple(adjacent),
        per_pair_parity=parity,
    )


def recover_signature(d: Drawing) -> SignatureFunction:
    """Read the signature back off the polylines.

    sign(i, j, k) is '-' exactly when edge (i, k) passes below vertex j,
    i.e. its bend on the vertex line x = j has negative y.
    """
    n = d.n
    signs: list[str] = []
    for i, j, k in combinations(range(1, n + 1), 3):
        y = dict((int(x), py) for x, py in d.polylines[(i, k)] if x == int(x))[j]
        assert y != 0, f"edge ({i},{k}) touches vertex {j}"
        signs.append(MINUS if y < 0 else PLUS)
    return SignatureFunction(n, "".join(signs))


# --- JSON interchange --------------------------------------------------------


def drawing_to_json(d: Drawing) -> str:
    """Serialize to the documented drawing JSON (deterministic output)."""
    report = drawing_crossings(d)

    def compact(value) -> str:
        return json.dumps(value, separators=(", ", ": "))

    edge_lines = ",\n  ".join(
        compact({"u": u, "v": v, "polyline": [[x, y] for x, y in d.polylines[(u, v)]]})
        for u, v in sorted(d.polylines)
    )
    edges = f"[\n  {edge_lines}\n ]" if edge_lines else "[]"
    return (
        "{\n"
        f' "n": {d.n},\n'
        f' "vertices": {compact([[x, y] for x, y in d.vertices])},\n'
        f' "edges": {edges},\n'
        f' "crossings": {report.total_crossings}\n'
        "}"
    )


def drawing_from_json(text: str | bytes) -> Drawing:
    """Load and validate a drawing from the JSON interchange format."""
    data = json.loads(text)
    try:
        n = int(data["n"])
        vertices = tuple((float(x), float(y)) for x, y in data["vertices"])
        raw_edges = data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed drawing JSON: {exc}") from None
    if len(vertices) != n or vertices != tuple((float(i), 0.0) for i in range(1, n + 1)):
        raise ValueError("vertices must be (1,0) .. (n,0)")
    polylines: dict[Edge, tuple[Point, ...]] = {}
    for item in raw_edges:
        u, v = int(item["u"]), int(item["v"])
        pts = tuple((float(x), float(y)) for x, y in item["polyline"])
        if not (1 <= u < v <= n):
            raise ValueError(f"bad edge ({u},{v})")
        if pts[0] != (float(u), 0.0) or pts[-1] != (float(v), 0.0):
            raise ValueError(f"polyline of ({u},{v}) must run from (u,0) to (v,0)")
        expect = [float(u)]
        for m in range(u + 1, v + 1):
            expect.append(m - 0.5)
            if m < v:
                expect.append(float(m))
        expect.append(float(v))
        if [p[0] for p in pts] != expect:
            raise ValueError(f"polyline of ({u},{v}) is off the sampling grid")
        polylines[(u, v)] = pts
    if set(polylines) != set(combinations(range(1, n + 1), 2)):
        raise ValueError("edge set must be all pairs 1 <= u < v <= n")

    d = Drawing(
        n=n,
        vertices=vertices,
        slab_orders={},
        at_vertex_orders={},
        polylines=polylines,
    )
    columns = _sample_columns(d)  # also validates grid consistency
    xs = _sample_xs(n)
    slab_orders: dict[int, tuple[Edge, ...]] = {}
    at_vertex: dict[int, tuple[tuple[Edge, ...], tuple[Edge, ...]]] = {}
    for x, col in zip(xs, columns):
        ranked = sorted(col, key=lambda e: col[e])
        if x != int(x):
            m = int(x + 0.5)
            ys = sorted(col.values())
            if len(set(ys)) != len(ys):
                raise ValueError(f"tied edges in slab at x={x}")
            slab_orders[m] = tuple(ranked)
        else:
            m = int(x)
            below = tuple(e for e in ranked if col[e] < 0 and e[0] < m < e[1])
            above = tuple(e for e in ranked if col[e] > 0 and e[0] < m < e[1])
            for e in ranked:
                if col[e] == 0 and not (e[0] == m or e[1] == m):
                    raise ValueError(f"edge {e} touches vertex {m}")
                if col[e] != 0 and (e[0] == m or e[1] == m):
                    raise ValueError(f"edge {e} misses its endpoint {m}")
            at_vertex[m] = (below, above)
    d.slab_orders = slab_orders
    d.at_vertex_orders = at_vertex
    return d


# --- SVG export --------------------------------------------------------------

_SVG_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass(frozen=True)
class SvgOptions:
    scale_x: float = 72.0
    scale_y: float = 26.0
    pad: float = 36.0
    mark_crossings: bool = True
    label_vertices: bool = True


def _crossing_points(d: Drawing) -> list[tuple[Fraction, Fraction]]:
    """Exact coordinates of all inversion crossings, in a fixed order."""
    columns = _sample_columns(d)
    xs = [Fraction(x) for x in sorted(_sample_xs(d.n))]
    points: list[tuple[Fraction, Fraction]] = []
    for idx in range(len(xs) - 1):
        left, right = columns[idx], columns[idx + 1]
        x1, x2 = xs[idx], xs[idx + 1]
        common = sorted(set(left) & set(right))
        for e, f in combinations(common, 2):
            a1, a2 = Fraction(left[e]), Fraction(right[e])
            b1, b2 = Fraction(left[f]), Fraction(right[f])
            if (a1 - b1) * (a2 - b2) < 0:
                t = (b1 - a1) / ((a2 - a1) - (b2 - b1))
                points.append((x1 + t * (x2 - x1), a1 + t * (a2 - a1)))
    return points


def to_svg(d: Drawing, options: SvgOptions = SvgOptions()) -> str:
    """Standalone SVG: vertex disks on the axis, edges as polylines.

    Output is deterministic for a fixed drawing and options.
    """
    n = d.n
    ys = [y for pts in d.polylines.values() for _, y in pts] or [0.0]
    y_min, y_max = min(ys) - 0.8, max(ys) + 0.8
    sx, sy, pad = options.scale_x, options.scale_y, options.pad

    def tx(x: float) -> float:
        return pad + (x - 1) * sx

    def ty(y: float) -> float:
        return pad + (y_max - y) * sy

    width = tx(max(n, 1)) + pad
    height = ty(y_min) + pad
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">'
    ]
    for idx, (u, v) in enumerate(sorted(d.polylines)):
        pts = " ".join(f"{tx(x):.2f},{ty(y):.2f}" for x, y in d.polylines[(u, v)])
        color = _SVG_COLORS[idx % len(_SVG_COLORS)]
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="1.5"/>'
        )
    if options.mark_crossings:
        r = 3.0
        for cx, cy in _crossing_points(d):
            x, y = tx(float(cx)), ty(float(cy))
            out.append(
                f'<path d="M {x - r:.2f} {y - r:.2f} L {x + r:.2f} {y + r:.2f} '
                f'M {x - r:.2f} {y + r:.2f} L {x + r:.2f} {y - r:.2f}" '
                f'stroke="#000000" stroke-width="1.2" fill="none"/>'
            )
    for i, (x, y) in enumerate(d.vertices, start=1):
        out.append(
            f'<circle cx="{tx(x):.2f}" cy="{ty(y):.2f}" r="4.5" fill="#111111"/>'
        )
        if options.label_vertices:
            out.append(
                f'<text x="{tx(x):.2f}" y="{ty(y) + 18:.2f}" font-size="12" '
                f'text-anchor="middle" font-family="sans-serif">v{i}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


# --- point location ----------------------------------------------------------

PERTURB_EPSILON = Fraction(1, 4096)


def _segments(pts: tuple[Point, ...]) -> Iterator[tuple[Fraction, Fraction, Fraction, Fraction]]:
    for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
        yield Fraction(x1), Fraction(y1), Fraction(x2), Fraction(y2)


def _on_segment(px: Fraction, py: Fraction, x1: Fraction, y1: Fraction,
                x2: Fraction, y2: Fraction) -> bool:
    if not (min(x1, x2) <= px <= max(x1, x2) and min(y1, y2) <= py <= max(y1, y2)):
        return False
    return (x2 - x1) * (py - y1) == (y2 - y1) * (px - x1)


def _on_any_polyline(d: Drawing, px: Fraction, py: Fraction) -> bool:
    return any(
        _on_segment(px, py, *seg)
        for pts in d.polylines.values()
        for seg in _segments(pts)
    )


def _ring_contains(ring: list[Point], px: Fraction, py: Fraction) -> bool:
    """Even-odd containment against a closed polygonal curve, exact."""
    inside = False
    for i in range(len(ring)):
        x1, y1 = Fraction(ring[i][0]), Fraction(ring[i][1])
        x2, y2 = Fraction(ring[(i + 1) % len(ring)][0]), Fraction(ring[(i + 1) % len(ring)][1])
        if (y1 > py) != (y2 > py):
            xi = x1 + (py - y1) * (x2 - x1) / (y2 - y1)
            if xi > px:
                inside = not inside
    return inside


def triangle_ring(d: Drawing, a: int, b: int, c: int) -> list[Point]:
    """The closed curve of triangle (a, b, c): its three polylines chained."""
    ab = list(d.polylines[(a, b)])
    bc = list(d.polylines[(b, c)])
    ca = list(reversed(d.polylines[(a, c)]))
    return ab + bc[1:] + ca[1:-1]


def containing_triangle(
    d: Drawing, p: tuple[float, float]
) -> Optional[tuple[int, int, int]]:
    """Some triangle whose closed region contains p, or None (outer face).

    Brute force over all C(n,3) triangles with exact even-odd containment.
    A query point on a polyline is nudged upward by PERTURB_EPSILON, at
    most 8 times, before giving up.
    """
    px, py = Fraction(p[0]), Fraction(p[1])
    tries = 0
    while _on_any_polyline(d, px, py):
        py += PERTURB_EPSILON
        tries += 1
        if tries > 8:
            raise ValueError("query point stays on a polyline after perturbation")
    for a, b, c in combinations(range(1, d.n + 1), 3):
        if _ring_contains(triangle_ring(d, a, b, c), px, py):
            return (a, b, c)
    return None
