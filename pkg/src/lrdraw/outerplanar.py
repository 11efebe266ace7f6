"""Maximal outerplanar graphs, their ordered dual trees, and assembly of
an outerplanar drawing from a star-shaped drawing of the dual.

Vertices 0..n-1 sit in clockwise order on the outer cycle; only chords
are stored.  Internal faces come from recursive ear splitting on the
cyclic order, so a triangle of a maximal graph is always listed with its
vertices in increasing order, which is also its clockwise order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .drawing import OUTERPLANAR, GridDrawing
from .tree_model import (
    Tree,
    left_right_path,
    leftmost_path,
    random_tree,
    right_left_path,
    rightmost_path,
)


def _crossing(a, b, c, d) -> bool:
    # both chords normalized with first endpoint smaller
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class OuterplanarGraph:
    n: int
    chords: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("an outerplanar graph needs at least 3 vertices")
        norm = set()
        for pair in self.chords:
            a, b = pair
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError("chord endpoint out of range: %r" % (pair,))
            a, b = min(a, b), max(a, b)
            if a == b:
                raise ValueError("chord with equal endpoints: %r" % (pair,))
            if b - a == 1 or (a == 0 and b == self.n - 1):
                raise ValueError("chord equals an outer edge: %r" % (pair,))
            if (a, b) in norm:
                raise ValueError("duplicate chord: %r" % (pair,))
            norm.add((a, b))
        chords = sorted(norm)
        for i, (a, b) in enumerate(chords):
            for c, d in chords[i + 1:]:
                if _crossing(a, b, c, d):
                    raise ValueError(
                        "crossing chords: %r and %r" % ((a, b), (c, d))
                    )
        object.__setattr__(self, "chords", frozenset(norm))

    @property
    def is_maximal(self) -> bool:
        return len(self.chords) == self.n - 3

    def edges(self) -> list:
        cyc = [(i, i + 1) for i in range(self.n - 1)] + [(0, self.n - 1)]
        return cyc + sorted(self.chords)


def parse_graph(text: str) -> OuterplanarGraph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty graph description")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError("first line must be the vertex count")
    chords = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError("chord line must be two integers: %r" % ln)
        chords.append((int(parts[0]), int(parts[1])))
    if len(chords) != len(set(tuple(sorted(c)) for c in chords)):
        raise ValueError("duplicate chord in input")
    return OuterplanarGraph(n, frozenset(tuple(sorted(c)) for c in chords))


def internal_faces(g: OuterplanarGraph) -> list:
    """Vertex chains of the internal faces, each increasing.

    Ear splitting on the cyclic order: the face touching segment (i, j)
    from inside is traced by repeatedly taking the farthest neighbor
    within the interval, then each non-trivial face edge spawns a
    sub-interval.
    """
    adj: list = [set() for _ in range(g.n)]
    for a, b in g.edges():
        adj[a].add(b)
        adj[b].add(a)
    out = []
    stack = [(0, g.n - 1)]
    while stack:
        i, j = stack.pop()
        chain = [i]
        c = i
        while c != j:
            c = max(k for k in adj[c] if c < k <= j and (c, k) != (i, j))
            chain.append(c)
        out.append(tuple(chain))
        for a, b in zip(chain, chain[1:]):
            if b > a + 1:
                stack.append((a, b))
    return out


def triangulate(g: OuterplanarGraph) -> OuterplanarGraph:
    """Fan-triangulate every internal face from its lowest-index vertex."""
    if g.is_maximal:
        return g
    chords = set(g.chords)
    for chain in internal_faces(g):
        for v in chain[2:-1]:
            chords.add((chain[0], v))
    return OuterplanarGraph(g.n, frozenset(chords))


@dataclass(frozen=True)
class DualMapping:
    tree: Tree
    gamma: tuple  # tree node index -> graph vertex
    root_edge: tuple  # (u, v) with v immediately clockwise after u

    @property
    def n(self) -> int:
        return self.tree.n + 2


def _entry(tri, shared) -> tuple:
    """Ordered entry edge of a face: the rotation of the clockwise vertex
    order that puts the non-shared vertex last."""
    a, b, c = tri
    w = (set(tri) - set(shared)).pop()
    for rot in ((a, b, c), (b, c, a), (c, a, b)):
        if rot[2] == w:
            return rot[0], rot[1]
    raise AssertionError("unreachable")


def dual_tree(g: OuterplanarGraph, root_edge: tuple = (0, 1)) -> DualMapping:
    if not g.is_maximal:
        raise ValueError("dual tree needs a maximal graph; triangulate first")
    u, v = root_edge
    if not (0 <= u < g.n) or v != (u + 1) % g.n:
        raise ValueError(
            "root edge must be an outer-cycle edge (u, v) with v "
            "immediately clockwise after u"
        )
    tris = internal_faces(g)
    e2f: dict = {}
    for fi, tri in enumerate(tris):
        for e in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])):
            e2f.setdefault(e, []).append(fi)

    def across(fi, a, b):
        fs = e2f[min(a, b), max(a, b)]
        if len(fs) == 1:
            return None
        return fs[0] if fs[1] == fi else fs[1]

    root_fs = e2f[min(u, v), max(u, v)]
    assert len(root_fs) == 1  # an outer edge bounds one internal face
    left: list = []
    right: list = []
    gamma: list = []

    def new_node():
        left.append(None)
        right.append(None)
        gamma.append(None)
        return len(left) - 1

    stack = [(root_fs[0], (u, v), new_node())]
    while stack:
        fi, (eu, ev), node = stack.pop()
        tri = tris[fi]
        w = (set(tri) - {eu, ev}).pop()
        gamma[node] = w
        fl = across(fi, eu, w)
        fr = across(fi, ev, w)
        if fl is not None:
            c = new_node()
            left[node] = c
            stack.append((fl, _entry(tris[fl], (eu, w)), c))
        if fr is not None:
            c = new_node()
            right[node] = c
            stack.append((fr, _entry(tris[fr], (ev, w)), c))

    dm = DualMapping(Tree(tuple(left), tuple(right), 0), tuple(gamma), (u, v))
    _check_mapping(g, dm)
    return dm


def _closure_edges(t: Tree, gamma) -> set:
    """Edges of the tree plus, per node, edges to every node on its
    left-right and right-left paths, mapped through gamma."""
    edges = set()
    for s in range(t.n):
        for fn in (left_right_path, right_left_path):
            for x in fn(t, s).nodes[1:]:
                a, b = gamma[s], gamma[x]
                edges.add((min(a, b), max(a, b)))
    return edges


def _check_mapping(g: OuterplanarGraph, dm: DualMapping) -> None:
    """gamma must biject onto the vertices other than u*, v*, and the
    graph minus u*, v* must equal the path-closure supergraph of the
    tree under gamma."""
    t = dm.tree
    assert t.n == g.n - 2
    u, v = dm.root_edge
    assert set(dm.gamma) == set(range(g.n)) - {u, v}
    inner = {
        (min(a, b), max(a, b))
        for a, b in g.edges()
        if u not in (a, b) and v not in (a, b)
    }
    assert _closure_edges(t, dm.gamma) == inner


def primal_from_dual(dm: DualMapping) -> OuterplanarGraph:
    t = dm.tree
    gamma = dm.gamma
    u, v = dm.root_edge
    n = t.n + 2
    edges = set()

    def add(a, b):
        edges.add((min(a, b), max(a, b)))

    add(u, v)
    for e in _closure_edges(t, gamma):
        edges.add(e)
    for s in leftmost_path(t).nodes:
        add(u, gamma[s])
    for s in rightmost_path(t).nodes:
        add(v, gamma[s])

    def on_cycle(a, b):
        return b - a == 1 or (a == 0 and b == n - 1)

    missing = [
        (i, (i + 1) % n)
        for i in range(n)
        if (min(i, (i + 1) % n), max(i, (i + 1) % n)) not in edges
    ]
    if missing:
        raise ValueError("dual mapping does not close the outer cycle")
    chords = frozenset(e for e in edges if not on_cycle(*e))
    return OuterplanarGraph(n, chords)


def mapping_from_tree(t: Tree) -> DualMapping:
    """Canonical dual mapping of a bare tree with root edge (0, 1).

    Clockwise along the outer cycle after u* = 0 and v* = 1 come the
    vertices of the root's right region, then the root's own vertex,
    then the left region, so numbering follows a right-node-left sweep.
    """
    gamma = [0] * t.n
    nxt = 2
    stack = [(t.root, False)]
    while stack:
        s, ready = stack.pop()
        if ready:
            gamma[s] = nxt
            nxt += 1
            continue
        if t.left[s] is not None:
            stack.append((t.left[s], False))
        stack.append((s, True))
        if t.right[s] is not None:
            stack.append((t.right[s], False))
    return DualMapping(t, tuple(gamma), (0, 1))


def random_maximal_graph(n: int, seed: int = 0) -> OuterplanarGraph:
    if n < 3:
        raise ValueError("an outerplanar graph needs at least 3 vertices")
    return primal_from_dual(mapping_from_tree(random_tree(n - 2, seed)))


def assemble_outerplanar_drawing(
    dm: DualMapping, star: GridDrawing
) -> GridDrawing:
    """Place each graph vertex at its dual node's point and the root edge
    endpoints at the apexes; the result covers the apex-extended box."""
    if star.apexes is None:
        raise ValueError("star drawing lacks apexes")
    if set(star.points) != set(range(dm.tree.n)):
        raise ValueError("star drawing does not cover the dual tree")
    u, v = dm.root_edge
    pts = {dm.gamma[s]: p for s, p in star.points.items()}
    pts[u], pts[v] = star.apexes
    return GridDrawing(pts, OUTERPLANAR)
