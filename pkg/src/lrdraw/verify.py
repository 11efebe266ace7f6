"""Independent geometric checkers for every drawing kind.

Nothing constructed elsewhere is trusted without passing these; the
checkers re-derive every property from the tree/graph and raw points.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field

from .drawing import GridDrawing
from .geometry import (
    crossing_pairs,
    cyclic_ccw,
    on_segment_interior,
    point_in_polygon,
    point_on_any_segment,
    segments_conflict,
)
from .tree_model import (
    Tree,
    left_right_path,
    leftmost_path,
    postorder,
    right_left_path,
    rightmost_path,
)


@dataclass
class VerifyReport:
    ok: bool = True
    violations: list = field(default_factory=list)

    def fail(self, prop: str, witness) -> None:
        self.ok = False
        self.violations.append({"property": prop, "witness": witness})

    def to_json(self) -> str:
        return json.dumps({"pass": self.ok, "violations": self.violations})

    def merge(self, other: "VerifyReport") -> None:
        if not other.ok:
            self.ok = False
            self.violations.extend(other.violations)


def _parents(t: Tree):
    par = [None] * t.n
    for v in range(t.n):
        for c in (t.left[v], t.right[v]):
            if c is not None:
                par[c] = v
    return par


def _tree_edges(t: Tree):
    return [
        (v, c)
        for v in range(t.n)
        for c in (t.left[v], t.right[v])
        if c is not None
    ]


# -- LR drawings --------------------------------------------------------------


def is_lr_drawing(t: Tree, d: GridDrawing) -> VerifyReport:
    """Check the recursive left-rule/right-rule shape exactly.

    Left rule: the left subtree's box has its top row one unit below the
    root and its right column one unit left of it; the right subtree's
    box starts one unit below the left box with its root in the root's
    column.  Right rule is the mirror image.  A missing subtree is an
    empty box.
    """
    rep = VerifyReport()
    if set(d.points) != set(range(t.n)):
        raise ValueError("drawing does not cover exactly the tree's nodes")
    ys = [d.points[v][1] for v in range(t.n)]
    if len(set(ys)) != t.n:
        rep.fail("one-node-per-row", sorted(set(y for y in ys if ys.count(y) > 1)))
        return rep
    # bounding box per subtree, bottom-up
    box: dict = {}
    for v in postorder(t):
        x, y = d.points[v]
        x0 = x1 = x
        y0 = y1 = y
        for c in (t.left[v], t.right[v]):
            if c is not None:
                cx0, cy0, cx1, cy1 = box[c]
                x0, y0 = min(x0, cx0), min(y0, cy0)
                x1, y1 = max(x1, cx1), max(y1, cy1)
        box[v] = (x0, y0, x1, y1)
    for v in range(t.n):
        x, y = d.points[v]
        l, r = t.left[v], t.right[v]
        if l is None and r is None:
            continue
        if y != box[v][3]:
            rep.fail("root-on-top", [v])
            continue

        def left_rule_ok() -> bool:
            if l is not None:
                lx0, ly0, lx1, ly1 = box[l]
                if ly1 != y - 1 or lx1 != x - 1:
                    return False
                below = ly0 - 1
            else:
                below = y - 1
            if r is not None:
                if box[r][3] != below or d.points[r][0] != x:
                    return False
            return True

        def right_rule_ok() -> bool:
            if r is not None:
                rx0, ry0, rx1, ry1 = box[r]
                if ry1 != y - 1 or rx0 != x + 1:
                    return False
                below = ry0 - 1
            else:
                below = y - 1
            if l is not None:
                if box[l][3] != below or d.points[l][0] != x:
                    return False
            return True

        if not (left_rule_ok() or right_rule_ok()):
            rep.fail("lr-rule-shape", [v])
    return rep


# -- generic planarity --------------------------------------------------------


def is_planar_straightline(points, segments) -> VerifyReport:
    """points: list of (x, y); segments: list of point-index pairs."""
    rep = VerifyReport()
    segs = [(points[i], points[j]) for i, j in segments]
    for i, j in segments:
        if points[i] == points[j]:
            rep.fail("degenerate-segment", [i, j])
            return rep
    for i, j in crossing_pairs(segs, limit=3):
        rep.fail("segment-crossing", [list(segments[i]), list(segments[j])])
    used = sorted({v for s in segments for v in s})
    for pi, si in point_on_any_segment([points[v] for v in used], segs, limit=3):
        rep.fail("point-on-segment", [used[pi], list(segments[si])])
    return rep


# -- star-shaped drawings -----------------------------------------------------


def _polygon_paths(t: Tree):
    """(s, path nodes) for every nondegenerate left-right/right-left cycle."""
    out = []
    for s in range(t.n):
        for path in (left_right_path(t, s), right_left_path(t, s)):
            if len(path.nodes) >= 2:
                out.append((s, path.nodes))
    return out


def _edge_set(t: Tree):
    """Tree edges plus the closing edge of every nondegenerate cycle."""
    edges = set()
    for v, c in _tree_edges(t):
        edges.add((min(v, c), max(v, c)))
    for s, nodes in _polygon_paths(t):
        e = (min(s, nodes[-1]), max(s, nodes[-1]))
        edges.add(e)
    return sorted(edges)


def _check_order_preserving(t: Tree, pts, rep: VerifyReport) -> None:
    par = _parents(t)
    for v in range(t.n):
        p, l, r = par[v], t.left[v], t.right[v]
        if p is None or l is None or r is None:
            continue
        x, y = pts[v]
        dp = (pts[p][0] - x, pts[p][1] - y)
        dl = (pts[l][0] - x, pts[l][1] - y)
        dr = (pts[r][0] - x, pts[r][1] - y)
        if not cyclic_ccw(dp, dl, dr):
            rep.fail("order-preserving", [v])


def _check_polygon(s, nodes, pts, rep: VerifyReport) -> bool:
    """Property of a single cycle polygon: simple, with s seeing all of it."""
    m = len(nodes)
    if m <= 2:
        return True  # degenerates into a vertex or an edge
    poly = [pts[v] for v in nodes]
    edges = [(poly[i], poly[(i + 1) % m]) for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            a, b = edges[i]
            c, dd = edges[j]
            if segments_conflict(a, b, c, dd):
                rep.fail("polygon-simple", [nodes[i], nodes[j]])
                return False
    # diagonals from s to every non-adjacent polygon vertex stay inside
    poly2 = [(2 * x, 2 * y) for x, y in poly]
    for i in range(2, m - 1):
        a, b = poly[0], poly[i]
        for j in range(m):
            c, dd = edges[j]
            if {a, b} & {c, dd}:
                if on_segment_interior(c, a, b) or on_segment_interior(dd, a, b):
                    rep.fail("polygon-visibility", [nodes[0], nodes[i], j])
                    return False
                continue
            if segments_conflict(a, b, c, dd):
                rep.fail("polygon-visibility", [nodes[0], nodes[i], j])
                return False
        mid = (a[0] + b[0], a[1] + b[1])
        if not point_in_polygon(mid, poly2):
            rep.fail("polygon-visibility", [nodes[0], nodes[i], "midpoint"])
            return False
    return True


def apex_visibility(t: Tree, pts, p_u, p_v, edge_segs) -> VerifyReport:
    """Segments from p_u to the leftmost path, p_v to the rightmost path,
    and p_u p_v must cross nothing and hit no vertex."""
    rep = VerifyReport()
    lp = leftmost_path(t).nodes
    rp = rightmost_path(t).nodes
    extra = [(p_u, pts[v]) for v in lp]
    extra += [(p_v, pts[v]) for v in rp]
    extra.append((p_u, p_v))
    allsegs = edge_segs + extra
    for i, j in crossing_pairs(allsegs, limit=20):
        if i >= len(edge_segs) or j >= len(edge_segs):
            rep.fail("apex-visibility", [list(allsegs[i]), list(allsegs[j])])
    if rep.ok:
        for p in list(pts) + [p_u, p_v]:
            for seg in extra:
                if on_segment_interior(p, *seg):
                    rep.fail("apex-visibility", [list(p), list(seg)])
                    return rep
        for p in (p_u, p_v):
            if p in set(pts):
                rep.fail("apex-on-vertex", [list(p)])
            for seg in edge_segs:
                if on_segment_interior(p, *seg):
                    rep.fail("apex-on-edge", [list(p)])
    return rep


def is_star_shaped(t: Tree, d: GridDrawing, exhaustive: bool = False) -> VerifyReport:
    rep = VerifyReport()
    if d.apexes is None:
        raise ValueError("star-shaped check needs apexes")
    pts = [d.points[v] for v in range(t.n)]
    if len(set(pts)) != t.n:
        rep.fail("distinct-points", [])
        return rep
    p_u, p_v = d.apexes

    # Property 1: planar, straight-line, order-preserving
    rep.merge(is_planar_straightline(pts, _tree_edges(t)))
    _check_order_preserving(t, pts, rep)
    if not rep.ok:
        return rep

    # Property 2 per node
    polys = _polygon_paths(t)
    for s, nodes in polys:
        if not _check_polygon(s, nodes, pts, rep):
            return rep

    # Property 3: global planarity of tree + closing edges, no vertex
    # inside any edge, and hung-subtree containment probes
    edge_pairs = _edge_set(t)
    rep.merge(is_planar_straightline(pts, edge_pairs))
    if not rep.ok:
        return rep
    par = _parents(t)
    onpath: dict = {}
    for s, nodes in polys:
        onpath.setdefault(s, set()).update(nodes)
    for s, nodes in polys:
        if len(nodes) <= 2:
            continue
        poly = [pts[v] for v in nodes]
        probes = set()
        for u in nodes:
            for c in (t.left[u], t.right[u], par[u]):
                if c is not None and c not in nodes:
                    probes.add(c)
        for c in probes:
            if point_in_polygon(pts[c], poly):
                rep.fail("polygon-disjoint", [s, c])
                return rep
    if exhaustive:
        big = [(s, [pts[v] for v in nodes]) for s, nodes in polys if len(nodes) >= 3]
        for i in range(len(big)):
            for j in range(len(big)):
                if i == j:
                    continue
                si, pi = big[i]
                sj, pj = big[j]
                pj2 = [(2 * x, 2 * y) for x, y in pj]
                for k in range(len(pi)):
                    if point_in_polygon(pi[k], pj):
                        rep.fail("polygon-disjoint", [si, sj])
                        return rep
                    a = pi[k]
                    b = pi[(k + 1) % len(pi)]
                    mid = (a[0] + b[0], a[1] + b[1])
                    if point_in_polygon(mid, pj2):
                        rep.fail("polygon-disjoint", [si, sj])
                        return rep

    # Property 4
    edge_segs = [(pts[i], pts[j]) for i, j in edge_pairs]
    rep.merge(apex_visibility(t, pts, p_u, p_v, edge_segs))
    return rep


def is_bell_like(t: Tree, d: GridDrawing) -> VerifyReport:
    """Root on the top row, and corner apex probes satisfy the apex
    visibility requirement."""
    rep = VerifyReport()
    pts = [d.points[v] for v in range(t.n)]
    x0, y0, x1, y1 = d.bbox()
    if d.points[t.root][1] != y1:
        rep.fail("bell-root-on-top", [t.root])
        return rep
    edge_segs = [(pts[i], pts[j]) for i, j in _edge_set(t)]
    rep.merge(apex_visibility(t, pts, (x0 - 1, y1 + 1), (x1 + 1, y1 + 1), edge_segs))
    return rep


def is_flat(t: Tree, d: GridDrawing) -> VerifyReport:
    """Leftmost and rightmost paths on the left boundary column, the
    former descending from the root, the latter ascending."""
    rep = VerifyReport()
    x0, _, _, _ = d.bbox()
    lp = leftmost_path(t).nodes
    rp = rightmost_path(t).nodes
    for v in set(lp) | set(rp):
        if d.points[v][0] != x0:
            rep.fail("flat-boundary-column", [v])
            return rep
    for i in range(1, len(lp)):
        if not d.points[lp[i - 1]][1] > d.points[lp[i]][1]:
            rep.fail("flat-left-monotone", [lp[i - 1], lp[i]])
            return rep
    for i in range(1, len(rp)):
        if not d.points[rp[i - 1]][1] < d.points[rp[i]][1]:
            rep.fail("flat-right-monotone", [rp[i - 1], rp[i]])
            return rep
    return rep


# -- outerplanar drawings -----------------------------------------------------


def _ccw_order(p, nbrs, pts):
    """Neighbor ids sorted counter-clockwise by direction from p,
    starting just above the positive x axis; exact integer comparisons."""

    def cmp(a, b):
        (ax, ay), (bx, by) = pts[a], pts[b]
        da = (ax - p[0], ay - p[1])
        db = (bx - p[0], by - p[1])
        ha = 0 if da[1] > 0 or (da[1] == 0 and da[0] > 0) else 1
        hb = 0 if db[1] > 0 or (db[1] == 0 and db[0] > 0) else 1
        if ha != hb:
            return ha - hb
        cr = da[0] * db[1] - da[1] * db[0]
        return (cr < 0) - (cr > 0)

    return sorted(nbrs, key=functools.cmp_to_key(cmp))


def outer_face_walk(pts, edges) -> list:
    """Vertex sequence of the unbounded face of a crossing-free
    straight-line drawing, traversed clockwise.

    The rotation system comes from the coordinates; the walk starts at
    the bottommost (then leftmost) vertex, which always lies on the
    outer face, and leaves it along its angularly last edge.
    """
    adj: dict = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    order = {v: _ccw_order(pts[v], ns, pts) for v, ns in adj.items()}
    v0 = min(adj, key=lambda v: (pts[v][1], pts[v][0]))
    start = (v0, order[v0][-1])
    walk = [v0]
    cur = start
    while True:
        a, b = cur
        ring = order[b]
        nxt = ring[(ring.index(a) - 1) % len(ring)]
        cur = (b, nxt)
        if cur == start:
            return walk
        walk.append(b)


def is_outerplanar_drawing(g, d: GridDrawing) -> VerifyReport:
    """Planar straight-line, and the unbounded face is bounded by the
    outer cycle 0..n-1 in cyclic order, so every vertex touches it."""
    rep = VerifyReport()
    if set(d.points) != set(range(g.n)):
        raise ValueError("drawing does not cover exactly the graph's vertices")
    pts = [d.points[v] for v in range(g.n)]
    edges = [(i, (i + 1) % g.n) for i in range(g.n)] + sorted(g.chords)
    rep.merge(is_planar_straightline(pts, edges))
    if not rep.ok:
        return rep
    walk = outer_face_walk(pts, edges)
    if sorted(walk) != list(range(g.n)):
        missing = sorted(set(range(g.n)) - set(walk))
        rep.fail("outer-face", missing if missing else walk)
        return rep
    i0 = walk.index(0)
    rot = walk[i0:] + walk[:i0]
    if rot != list(range(g.n)) and rot != [0] + list(range(g.n - 1, 0, -1)):
        rep.fail("outer-cycle-order", rot)
    return rep
