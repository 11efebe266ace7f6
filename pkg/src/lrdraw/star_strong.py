"""Star-shaped drawings with width O(2^sqrt(2 log2 n) * sqrt(log n)).

Both drawing styles recurse on a heavy spine: the spine keeps at least
n - A nodes until its last node, so the subtrees hanging off it have at
most A nodes and the tail subtrees fewer than n - A.  With few spine
direction switches the drawing stacks everything on one column plus a
recursive strip; with many switches a two-column spine layout caps the
width at a constant plus the recursive widths, which closes the
recurrence behind the stated bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .drawing import BELL_LIKE, FLAT, GridDrawing
from .lr_opt import min_width, rep_sequence
from .star_weak import _bounds, _rot, _shift, _stack, bell_like_drawing, flat_drawing
from .tree_model import Tree, subtree_sizes

# below this size the O(width) constructions of star_weak are at least
# as good and need no spine structure
_FLOOR = 16


def choose_A(n: int) -> int:
    """Spine parameter A = floor(n / 2^sqrt(2 log2 n)), at least 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    return max(1, math.floor(n / 2 ** math.sqrt(2 * math.log2(n))))


@dataclass
class SpineDecomposition:
    spine: list  # v_1 .. v_k
    off_subtrees: list  # per spine node, the child off the spine (None allowed)
    right_tail: list  # rightmost path from v_k
    tail_subtrees: list  # left-subtree roots of the right tail nodes
    switches: list  # 0-based i where (spine[i], spine[i+1], spine[i+2]) switches


class _SView:
    """The tree with optionally swapped child roles, for mirrored builds."""

    __slots__ = ("t", "m")

    def __init__(self, t: Tree, m: bool = False):
        self.t = t
        self.m = m

    def left(self, v):
        return self.t.right[v] if self.m else self.t.left[v]

    def right(self, v):
        return self.t.left[v] if self.m else self.t.right[v]

    def flipped(self) -> "_SView":
        return _SView(self.t, not self.m)


class _Ctx:
    __slots__ = ("t", "sizes", "trace")

    def __init__(self, t: Tree, trace):
        self.t = t
        self.sizes = subtree_sizes(t)
        self.trace = trace


def _vwalk(V: _SView, start: int, right: bool) -> list:
    out = [start]
    while True:
        nxt = V.right(out[-1]) if right else V.left(out[-1])
        if nxt is None:
            return out
        out.append(nxt)


def _greedy_spine(ctx: _Ctx, V: _SView, v: int, A: int) -> list:
    """Descend into a child keeping at least n - A nodes while one exists;
    prefer the larger child, ties to the right."""
    sizes = ctx.sizes
    need = sizes[v] - A
    path = [v]
    while True:
        u = path[-1]
        l, r = V.left(u), V.right(u)
        ls = sizes[l] if l is not None else 0
        rs = sizes[r] if r is not None else 0
        if rs >= need and rs >= ls:
            path.append(r)
        elif ls >= need:
            path.append(l)
        else:
            return path


def _switches(V: _SView, path: list) -> list:
    sw = []
    for i in range(len(path) - 2):
        d1 = path[i + 1] == V.left(path[i])
        d2 = path[i + 2] == V.left(path[i + 1])
        if d1 != d2:
            sw.append(i)
    return sw


def spine(t: Tree, A: int) -> SpineDecomposition:
    if not 1 <= A < t.n:
        raise ValueError("A must satisfy 1 <= A < n")
    ctx = _Ctx(t, None)
    V = _SView(t)
    path = _greedy_spine(ctx, V, t.root, A)
    need = t.n - A
    assert path[0] == t.root
    assert ctx.sizes[path[-1]] >= need
    off = []
    for i, u in enumerate(path[:-1]):
        other = t.right[u] if path[i + 1] == t.left[u] else t.left[u]
        off.append(other)
        assert other is None or ctx.sizes[other] <= A
    tail = _vwalk(V, path[-1], right=True)
    tail_subs = [t.left[u] for u in tail if t.left[u] is not None]
    for c in (t.left[path[-1]], t.right[path[-1]]):
        assert c is None or ctx.sizes[c] < need
    for c in tail_subs:
        assert ctx.sizes[c] < need
    return SpineDecomposition(path, off, tail, tail_subs, _switches(V, path))


def count_switches(sp: SpineDecomposition) -> int:
    return len(sp.switches)


# -- geometric helpers --------------------------------------------------------


def _w(pts: dict) -> int:
    x0, _, x1, _ = _bounds(pts)
    return x1 - x0 + 1


def _h(pts: dict) -> int:
    _, y0, _, y1 = _bounds(pts)
    return y1 - y0 + 1


def _yflip(pts: dict) -> dict:
    return {u: (x, -y) for u, (x, y) in pts.items()}


def _xflip(pts: dict) -> dict:
    return {u: (-x, y) for u, (x, y) in pts.items()}


def _xalign(pts: dict, col: int, right_edge: bool = False) -> dict:
    x0, _, x1, _ = _bounds(pts)
    return _shift(pts, col - (x1 if right_edge else x0), 0)


def _aligned_at(pts: dict, root: int, col: int, right_edge: bool = False) -> dict:
    """Align one bounding box side to col with the root on row 0."""
    x0, _, x1, _ = _bounds(pts)
    return _shift(pts, col - (x1 if right_edge else x0), -pts[root][1])


def _below_at(pts: dict, col: int, right_edge: bool = False) -> dict:
    """Align one bounding box side to col with the top row at -1."""
    x0, _, x1, y1 = _bounds(pts)
    return _shift(pts, col - (x1 if right_edge else x0), -1 - y1)


def _record(ctx: _Ctx, n, A, s, case, pts, bound) -> None:
    w = _w(pts)
    assert w <= bound, (case, n, s, w, bound)
    assert _h(pts) <= n, (case, n, _h(pts))
    if ctx.trace is not None:
        ctx.trace.append((n, A, s, case, w, bound))


# -- recursion ----------------------------------------------------------------


def _params(n: int, thr: int) -> int:
    # the threshold is reused verbatim on larger trees and recomputed
    # once the size drops to the threshold or below
    return thr if n > thr else choose_A(n)


def _extract(V: _SView, v: int):
    """Standalone Tree for the subtree at v in view orientation, plus the
    new-id -> old-id map."""
    ids: dict = {}
    order = []
    stack = [v]
    while stack:
        u = stack.pop()
        ids[u] = len(order)
        order.append(u)
        r, l = V.right(u), V.left(u)
        if r is not None:
            stack.append(r)
        if l is not None:
            stack.append(l)
    left = [None] * len(order)
    right = [None] * len(order)
    for u in order:
        i = ids[u]
        l, r = V.left(u), V.right(u)
        left[i] = ids[l] if l is not None else None
        right[i] = ids[r] if r is not None else None
    return Tree(tuple(left), tuple(right), 0), order


def _weak_floor(ctx: _Ctx, V: _SView, v: int, flat: bool):
    sub, order = _extract(V, v)
    g = flat_drawing(sub) if flat else bell_like_drawing(sub)
    pts = {order[i]: p for i, p in g.points.items()}
    omega = min_width(rep_sequence(sub))
    bound = 4 * omega if flat else max(1, 4 * omega - 2)
    _record(ctx, sub.n, 0, -1, "weak-flat" if flat else "weak-bell", pts, bound)
    return pts, 0, 0


def _flat_rec(ctx: _Ctx, V: _SView, v: int, thr: int, forced: Optional[list] = None):
    n = ctx.sizes[v]
    if forced is None and n <= _FLOOR:
        return _weak_floor(ctx, V, v, flat=True)
    A = _params(n, thr)
    path = forced if forced is not None else _greedy_spine(ctx, V, v, A)
    sw = _switches(V, path)
    s = len(sw)
    # canonical frame: the spine leaves the root leftward when it has
    # switches, rightward when it has none
    flip = len(path) > 1 and (path[1] == V.left(path[0])) != (s >= 1)
    W = V.flipped() if flip else V
    if s >= 8:
        pts, ma, mb = _flat_big(ctx, W, v, path, sw, A)
    else:
        pts, ma, mb = _flat_small(ctx, W, v, path, sw, A)
    if flip:
        pts = _yflip(pts)
    return pts, ma, mb


def _bell_rec(ctx: _Ctx, V: _SView, v: int, thr: int, forced: Optional[list] = None):
    n = ctx.sizes[v]
    if forced is None and n <= _FLOOR:
        return _weak_floor(ctx, V, v, flat=False)
    A = _params(n, thr)
    path = forced if forced is not None else _greedy_spine(ctx, V, v, A)
    sw = _switches(V, path)
    s = len(sw)
    if forced is not None:
        assert s >= 5, "a handed-down spine needs at least 5 switches"
    if s >= 5:
        # canonical frame: the last spine edge goes right
        flip = path[-1] != V.right(path[-2])
        W = V.flipped() if flip else V
        pts, ma, mb = _bell_big(ctx, W, v, path, sw, A)
    else:
        if len(path) == 1:
            # single spine node: put the heavier child on the path side
            l, r = V.left(v), V.right(v)
            ls = ctx.sizes[l] if l is not None else 0
            rs = ctx.sizes[r] if r is not None else 0
            flip = rs >= ls and r is not None
        else:
            flip = path[1] != V.left(path[0])
        W = V.flipped() if flip else V
        pts, ma, mb = _bell_small(ctx, W, v, path, sw, A)
    if flip:
        pts = _xflip(pts)
    return pts, ma, mb


def _flat_small(ctx: _Ctx, V: _SView, v: int, path: list, sw: list, A: int):
    """All spine columns collapse onto x=0; subtrees sit flat at x=1 and
    the spine rest continues recursively inside one of them."""
    n = ctx.sizes[v]
    k = len(path)
    s = len(sw)
    acc = [0, 0]  # widths: subtrees of at most A nodes, larger tail subtrees

    def fold(pts, big):
        i = 1 if big else 0
        acc[i] = max(acc[i], _w(pts))

    def node_block(u, sub_root, big):
        b = {u: (0, 0)}
        if sub_root is not None:
            sub, _, _ = _flat_rec(ctx, V, sub_root, A)
            fold(sub, big)
            b.update(_aligned_at(sub, sub_root, 1))
        return b

    blocks = []
    if s == 0:
        spine_set = set(path[:-1])
        rp = _vwalk(V, path[0], right=True)
        for u in reversed(rp[1:]):
            blocks.append(node_block(u, V.left(u), big=u not in spine_set))
        blocks.append({path[0]: (0, 0)})
        l0 = V.left(path[0])
        if l0 is not None:
            for u in _vwalk(V, l0, right=False):
                blocks.append(node_block(u, V.right(u), big=k == 1))
    else:
        a = sw[0]
        r0 = V.right(path[0])
        if r0 is not None:
            for u in reversed(_vwalk(V, r0, right=True)):
                blocks.append(node_block(u, V.left(u), big=False))
        blocks.append({path[0]: (0, 0)})
        for i in range(1, a + 1):
            blocks.append(node_block(path[i], V.right(path[i]), big=False))
        cont, ca, cb = _flat_rec(ctx, V, path[a + 2], A, forced=path[a + 2 :])
        acc[0] = max(acc[0], ca)
        acc[1] = max(acc[1], cb)
        b = {path[a + 1]: (0, 0)}
        b.update(_aligned_at(cont, path[a + 2], 1))
        blocks.append(b)
        l1 = V.left(path[a + 1])
        if l1 is not None:
            for u in _vwalk(V, l1, right=False):
                blocks.append(node_block(u, V.right(u), big=False))
    pts = _stack(blocks)
    _record(ctx, n, A, s, "flat-small", pts, s + 1 + max(acc[0], acc[1], 1))
    return pts, acc[0], acc[1]


def _bell_small(ctx: _Ctx, V: _SView, v: int, path: list, sw: list, A: int):
    """Root on top with one bell-like subtree hanging under it; the left
    path descends on x=0 with flat subtrees at x=1."""
    n = ctx.sizes[v]
    k = len(path)
    s = len(sw)
    acc = [0, 0]

    def fold(pts, big):
        i = 1 if big else 0
        acc[i] = max(acc[i], _w(pts))

    spine_set = set(path[:-1])
    blocks = []
    b0 = {path[0]: (0, 0)}
    t1 = V.right(path[0])
    if t1 is not None:
        sub, _, _ = _bell_rec(ctx, V, t1, A)
        fold(sub, big=k == 1)
        b0.update(_below_at(sub, 1))
    blocks.append(b0)
    special = path[sw[0] + 1] if s >= 1 else None
    u = V.left(path[0])
    while u is not None:
        b = {u: (0, 0)}
        if u == special:
            cont, ca, cb = _flat_rec(ctx, V, path[sw[0] + 2], A, forced=path[sw[0] + 2 :])
            acc[0] = max(acc[0], ca)
            acc[1] = max(acc[1], cb)
            b.update(_aligned_at(cont, path[sw[0] + 2], 1))
        else:
            sub_root = V.right(u)
            if sub_root is not None:
                sub, _, _ = _flat_rec(ctx, V, sub_root, A)
                fold(sub, big=k == 1 or (s == 0 and u not in spine_set))
                b.update(_aligned_at(sub, sub_root, 1))
        blocks.append(b)
        u = V.left(u)
    pts = _stack(blocks)
    _record(ctx, n, A, s, "bell-small", pts, s + 1 + max(acc[0], acc[1], 1))
    return pts, acc[0], acc[1]


def _flat_big(ctx: _Ctx, V: _SView, v: int, path: list, sw: list, A: int):
    """Flat layout whose far column isolates the spine continuation: the
    subtree under the first switch is drawn as two bells, one of which
    keeps the spine and reuses it without recomputation."""
    n = ctx.sizes[v]
    s = len(sw)
    a = sw[0]
    acc = [0, 0]

    def fold(pts, big=False):
        i = 1 if big else 0
        acc[i] = max(acc[i], _w(pts))

    def flat_child(root):
        sub, _, _ = _flat_rec(ctx, V, root, A)
        fold(sub)
        return sub

    def node_block(u, sub_root):
        b = {u: (0, 0)}
        if sub_root is not None:
            b.update(_aligned_at(flat_child(sub_root), sub_root, 1))
        return b

    vj2 = path[a + 2]
    x_root = path[a + 3]
    c, d = V.left(vj2), V.right(vj2)
    assert x_root in (c, d)
    assert len(_switches(V, path[a + 3 :])) >= 5
    xpts, ca, cb = _bell_rec(ctx, V, x_root, A, forced=path[a + 3 :])
    acc[0] = max(acc[0], ca)
    acc[1] = max(acc[1], cb)
    y_root = d if x_root == c else c
    ypts = None
    if y_root is not None:
        ypts, _, _ = _bell_rec(ctx, V, y_root, A)
        fold(ypts)
    cpts = xpts if x_root == c else ypts
    dpts = xpts if x_root == d else ypts

    pi_r = []
    r0 = V.right(path[0])
    if r0 is not None:
        for u in reversed(_vwalk(V, r0, right=True)):
            pi_r.append(node_block(u, V.left(u)))

    lparts = []
    for i in range(1, a):
        lparts.append(node_block(path[i], V.right(path[i])))
    if a >= 1:
        off = V.right(path[a])
        if off is not None:
            lparts.append(_xalign(flat_child(off), 1))
    if dpts is not None:
        lparts.append(_xalign(_rot(dpts), 1))
    lparts.append({path[a]: (0, 0)})
    lparts.append({path[a + 1]: (0, 0)})
    if cpts is not None:
        lparts.append(_xalign(cpts, 1))
    u = V.left(path[a + 1])
    while u is not None:
        lparts.append(node_block(u, V.right(u)))
        u = V.left(u)

    if a == 0:
        pts = _stack(pi_r + lparts)
    else:
        pts = _stack(pi_r + [{path[0]: (0, 0)}] + lparts)
    far = max(x for x, _ in pts.values()) + 1
    pts[vj2] = (far, pts[path[a + 1]][1])
    _record(ctx, n, A, s, "flat-big", pts, 5 + max(2 * acc[0], acc[1], 1))
    return pts, acc[0], acc[1]


def _bell_big(ctx: _Ctx, V: _SView, v: int, path: list, sw: list, A: int):
    """Two-column spine with side subtrees, then a final one-column drop
    holding the spine rest and the tail subtrees."""
    n = ctx.sizes[v]
    k = len(path)
    s = len(sw)
    ps, ps1, ps2, p1 = sw[-1], sw[-2], sw[-3], sw[0]
    acc = [0, 0]

    def fold(pts, big):
        i = 1 if big else 0
        acc[i] = max(acc[i], _w(pts))

    bell_idx = {0, p1 + 1, ps, ps + 1}
    offs: dict = {}  # spine index -> (points, root, hangs on the left side)
    for i in range(k - 1):
        nxt = path[i + 1]
        l = V.left(path[i])
        off = l if nxt != l else V.right(path[i])
        if off is None:
            continue
        if i in bell_idx:
            sub, _, _ = _bell_rec(ctx, V, off, A)
        else:
            sub, _, _ = _flat_rec(ctx, V, off, A)
        fold(sub, big=False)
        offs[i] = (sub, off, off == l)
    pr = _vwalk(V, path[-1], right=True)
    lsubs: dict = {}
    for u in pr:
        lu = V.left(u)
        if lu is not None:
            sub, _, _ = _flat_rec(ctx, V, lu, A)
            fold(sub, big=True)
            lsubs[u] = (sub, lu)
    omega = max([_w(sub) for sub, _, _ in offs.values()] + [1])

    def node_x(i):
        if i == ps:
            return 0
        if i > ps:
            return -1
        return -omega - 2 if path[i + 1] == V.right(path[i]) else -omega - 1

    def aligned_off(i):
        sub, root, left_side = offs[i]
        if i > ps:
            return _aligned_at(_rot(sub), root, -2, right_edge=True)
        if left_side:
            return _aligned_at(_rot(sub), root, -omega - 3, right_edge=True)
        return _aligned_at(sub, root, -omega)

    def bell_below(i):
        sub, _, left_side = offs[i]
        if i > ps:
            return _below_at(sub, -2, right_edge=True)
        if left_side:
            return _below_at(sub, -omega - 3, right_edge=True)
        return _below_at(sub, -omega)

    def detached(i):
        sub, _, left_side = offs[i]
        if left_side:
            return _xalign(_rot(sub), -omega - 3, right_edge=True)
        return _xalign(sub, -omega)

    def spine_block(i, with_off=True):
        b = {path[i]: (node_x(i), 0)}
        if with_off and i in offs:
            b.update(bell_below(i) if i in bell_idx else aligned_off(i))
        return b

    blocks = [spine_block(i) for i in range(ps2)]
    if ps1 < ps - 1:
        for i in range(ps2, ps1):
            blocks.append(spine_block(i))
        for i in range(ps1 + 1, ps - 1):
            blocks.append(spine_block(i))
        if (ps - 1) in offs:
            blocks.append(detached(ps - 1))
        if ps in offs:
            sub, _, _ = offs[ps]
            blocks.append(_xalign(_rot(sub), -omega))
        blocks.append({path[ps - 1]: (node_x(ps - 1), 0), path[ps]: (0, 0)})
        blocks.append(spine_block(ps1))
    else:
        if ps2 in offs:
            blocks.append(detached(ps2))
        if ps in offs:
            sub, _, _ = offs[ps]
            blocks.append(_xalign(_rot(sub), -omega))
        for i in range(ps2, ps1):
            blocks.append(spine_block(i, with_off=i != ps2))
        row = {path[ps1]: (node_x(ps1), 0), path[ps]: (0, 0)}
        if ps1 in offs:
            row.update(aligned_off(ps1))
        blocks.append(row)
    for i in range(ps + 1, k - 1):
        blocks.append(spine_block(i))
    for u in pr:
        b = {u: (-1, 0)}
        if u in lsubs:
            sub, root = lsubs[u]
            b.update(_aligned_at(_rot(sub), root, -2, right_edge=True))
        blocks.append(b)
    pts = _stack(blocks)
    _record(ctx, n, A, s, "bell-big", pts, 3 + max(2 * omega, acc[1]))
    return pts, acc[0], acc[1]


# -- public entry points ------------------------------------------------------


def strong_flat(t: Tree, threshold: Optional[int] = None, trace=None) -> GridDrawing:
    if threshold is not None and threshold < 1:
        raise ValueError("threshold must be >= 1")
    ctx = _Ctx(t, trace)
    thr = threshold if threshold is not None else choose_A(t.n)
    pts, _, _ = _flat_rec(ctx, _SView(t), t.root, thr)
    x0, y0, x1, y1 = _bounds(pts)
    if y0 == y1:
        y1 += 1
    return GridDrawing(pts, FLAT, ((x0 - 1, y0), (x0 - 1, y1)))


def strong_bell(t: Tree, threshold: Optional[int] = None, trace=None) -> GridDrawing:
    if threshold is not None and threshold < 1:
        raise ValueError("threshold must be >= 1")
    ctx = _Ctx(t, trace)
    thr = threshold if threshold is not None else choose_A(t.n)
    pts, _, _ = _bell_rec(ctx, _SView(t), t.root, thr)
    x0, y0, x1, y1 = _bounds(pts)
    return GridDrawing(pts, BELL_LIKE, ((x0 - 1, y1 + 1), (x1 + 1, y1 + 1)))
