"""Bell-like and flat star-shaped drawings of width O(w).

Both constructions recurse on the spine path that stays in the root's
column of a width-optimal LR-drawing; the off-path subtrees get flat
drawings on the sides and one bell-like drawing per side at the first
rule change.  Bell-like calls flat on strictly narrower subtrees, flat
calls bell-like on strictly smaller ones, so the mutual recursion
terminates.
"""

from __future__ import annotations

from .drawing import BELL_LIKE, FLAT, GridDrawing
from .lr_opt import _lr_layout, per_node_sequences, per_node_widths, subtree_sizes
from .tree_model import LEFT, RIGHT, Tree


class _View:
    """The tree with optionally swapped child roles.

    The flat construction for a root whose spine starts to the right is
    the left-starting construction on the mirrored tree with the y axis
    flipped afterwards; the view keeps node ids stable through that.
    """

    __slots__ = ("t", "rules", "w", "m")

    def __init__(self, t: Tree, rules: dict, w: list, m: bool = False):
        self.t = t
        self.rules = rules
        self.w = w
        self.m = m

    def left(self, v):
        return self.t.right[v] if self.m else self.t.left[v]

    def right(self, v):
        return self.t.left[v] if self.m else self.t.right[v]

    def rule(self, v):
        r = self.rules.get(v)
        if r is None or not self.m:
            return r
        return LEFT if r == RIGHT else RIGHT

    def flipped(self) -> "_View":
        return _View(self.t, self.rules, self.w, not self.m)


def _shift(pts: dict, dx: int, dy: int) -> dict:
    return {v: (x + dx, y + dy) for v, (x, y) in pts.items()}


def _rot(pts: dict) -> dict:
    return {v: (-x, -y) for v, (x, y) in pts.items()}


def _bounds(pts: dict):
    xs = [x for x, _ in pts.values()]
    ys = [y for _, y in pts.values()]
    return min(xs), min(ys), max(xs), max(ys)


def _stack(blocks) -> dict:
    """Pile blocks top to bottom with touching bounding boxes.

    Rows stay contiguous, which is what keeps the height at n.
    """
    out: dict = {}
    top = 0
    for b in blocks:
        if not b:
            continue
        _, y0, _, y1 = _bounds(b)
        dy = top - y1
        for v, (x, y) in b.items():
            out[v] = (x, y + dy)
        top = y0 + dy - 1
    return out


def _spine(V: _View, v: int) -> list:
    """Path through the LR-drawing rules: the right rule descends left,
    the left rule descends right; ends at a leaf."""
    path = [v]
    while True:
        u = path[-1]
        r = V.rule(u)
        if r is None:
            return path
        path.append(V.left(u) if r == RIGHT else V.right(u))


def _bell(V: _View, v: int) -> dict:
    path = _spine(V, v)
    first_left = first_right = None
    for i, u in enumerate(path):
        r = V.rule(u)
        if r == LEFT and first_left is None:
            first_left = i
        if r == RIGHT and first_right is None:
            first_right = i
    blocks = []
    for i, u in enumerate(path):
        r = V.rule(u)
        nxt = path[i + 1] if i + 1 < len(path) else None
        xu = 2 if (nxt is not None and nxt == V.left(u)) else 1
        block = {u: (xu, 0)}
        off = None
        if r == LEFT:
            off = V.left(u)
        elif r == RIGHT:
            off = V.right(u)
        if off is not None and off != nxt:
            if r == LEFT:
                if i == first_left:
                    sub = _bell(V, off)
                    x0, _, x1, y1 = _bounds(sub)
                    sub = _shift(sub, -x1, -1 - y1)
                else:
                    sub = _rot(_flat(V, off))
                    x0, _, x1, _ = _bounds(sub)
                    sub = _shift(sub, -x1, -sub[off][1])
            else:
                if i == first_right:
                    sub = _bell(V, off)
                    x0, _, _, y1 = _bounds(sub)
                    sub = _shift(sub, 3 - x0, -1 - y1)
                else:
                    sub = _flat(V, off)
                    x0, _, _, _ = _bounds(sub)
                    sub = _shift(sub, 3 - x0, -sub[off][1])
            block.update(sub)
        blocks.append(block)
    return _stack(blocks)


def _aligned_block(V: _View, node: int, sub_root) -> dict:
    """Spine node at x=1 with the flat drawing of its off-path subtree
    starting at x=2, roots on a shared row."""
    block = {node: (1, 0)}
    if sub_root is not None:
        sub = _flat(V, sub_root)
        x0, _, _, _ = _bounds(sub)
        sub = _shift(sub, 2 - x0, -sub[sub_root][1])
        block.update(sub)
    return block


def _flat(V: _View, v: int) -> dict:
    rule = V.rule(v)
    if rule is None:
        return {v: (1, 0)}
    if rule == LEFT:
        pts = _flat(V.flipped(), v)
        return {u: (x, -y) for u, (x, y) in pts.items()}

    # the spine leaves the root leftward; the rightmost path stacks above
    # the root, the leftmost path below
    right_blocks = []
    u = V.right(v)
    while u is not None:
        right_blocks.append(_aligned_block(V, u, V.left(u)))
        u = V.right(u)
    right_blocks.reverse()
    pi_r = _stack(right_blocks)

    s_path = [v]
    while V.rule(s_path[-1]) == RIGHT and V.left(s_path[-1]) is not None:
        s_path.append(V.left(s_path[-1]))
    j = len(s_path)  # 1-based index of the first non-right-rule spine node
    sj = s_path[-1]

    left_parts = []
    root_inside = False
    if V.rule(sj) == LEFT:
        vj1 = V.right(sj)
        c, d = V.left(vj1), V.right(vj1)
        w = V.w[v]
        # upper stack: the subtrees of s_2..s_{j-2}, then the detached
        # drawing of s_{j-1}'s right subtree, then the rotated bell of D
        for i in range(2, j - 1):
            si = s_path[i - 1]
            left_parts.append(_aligned_block(V, si, V.right(si)))
        if j >= 3 and V.right(s_path[j - 2]) is not None:
            sub = _flat(V, V.right(s_path[j - 2]))
            x0, _, _, _ = _bounds(sub)
            left_parts.append(_shift(sub, 2 - x0, 0))
        if d is not None:
            sub = _rot(_bell(V, d))
            x0, _, _, _ = _bounds(sub)
            left_parts.append(_shift(sub, 2 - x0, 0))
        left_parts.append({s_path[j - 2]: (1, 0)} if j >= 3 else {v: (1, 0)})
        root_inside = j == 2
        left_parts.append({sj: (1, 0), vj1: (4 * w, 0)})
        if c is not None:
            sub = _bell(V, c)
            x0, _, _, _ = _bounds(sub)
            left_parts.append(_shift(sub, 2 - x0, 0))
        u = V.left(sj)
        while u is not None:
            left_parts.append(_aligned_block(V, u, V.right(u)))
            u = V.left(u)
    else:
        # the leftmost path ends at a leaf: plain stack, no far column
        for i in range(2, j + 1):
            si = s_path[i - 1]
            left_parts.append(_aligned_block(V, si, V.right(si)))
    pi_l = _stack(left_parts)

    if root_inside:
        return _stack([pi_r, pi_l])
    return _stack([pi_r, {v: (1, 0)}, pi_l])


def _prepared_view(t: Tree) -> _View:
    seqs = per_node_sequences(t)
    sizes = subtree_sizes(t)
    _, rules = _lr_layout(t, seqs, sizes)
    return _View(t, rules, per_node_widths(t, rules))


def bell_like_drawing(t: Tree) -> GridDrawing:
    pts = _bell(_prepared_view(t), t.root)
    x0, y0, x1, y1 = _bounds(pts)
    apexes = ((x0 - 1, y1 + 1), (x1 + 1, y1 + 1))
    return GridDrawing(pts, BELL_LIKE, apexes)


def flat_drawing(t: Tree) -> GridDrawing:
    pts = _flat(_prepared_view(t), t.root)
    x0, y0, x1, y1 = _bounds(pts)
    if y0 == y1:
        y1 += 1
    apexes = ((x0 - 1, y0), (x0 - 1, y1))
    return GridDrawing(pts, FLAT, apexes)
