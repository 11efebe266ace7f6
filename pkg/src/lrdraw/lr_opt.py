"""Representation sequences, minimum LR-drawing width, optimal drawings.

A representation sequence is stored as a tuple of non-increasing ints
ending in a single 0: entry i is the least right width achievable with
left width at most i.
"""

from __future__ import annotations

from typing import Optional

from .drawing import LR, GridDrawing
from .tree_model import LEFT, RIGHT, Tree, postorder, subtree_sizes


def seq_value(seq: tuple, i: int) -> int:
    # entries past the end are 0: once the last budget is reached, any
    # larger left-width budget is also satisfiable with right width 0
    return seq[i] if i < len(seq) else 0


def min_width(seq: tuple) -> int:
    return min(i + v + 1 for i, v in enumerate(seq))


def _argmin_index(seq: tuple) -> int:
    w = min_width(seq)
    for i, v in enumerate(seq):
        if i + v + 1 == w:
            return i
    raise AssertionError("unreachable")


def combine_sequences(sl: Optional[tuple], sr: Optional[tuple]) -> tuple:
    """Sequence of a root whose subtrees have sequences sl, sr (None = absent)."""
    if sl is None and sr is None:
        return (0,)
    if sl is None:
        return sr
    if sr is None:
        return sl
    wl = min_width(sl)
    wr = min_width(sr)
    vals = [max(seq_value(sl, i), wr) for i in range(wl)]
    vals += list(sr[wl:])
    # normalize the tail: exactly one trailing zero
    if vals[-1] != 0:
        vals.append(0)
    return tuple(vals)


def per_node_sequences(t: Tree) -> list:
    """seqs[v] = representation sequence of the subtree rooted at v."""
    seqs: list = [None] * t.n
    for v in postorder(t):
        l, r = t.left[v], t.right[v]
        seqs[v] = combine_sequences(
            seqs[l] if l is not None else None,
            seqs[r] if r is not None else None,
        )
    return seqs


def rep_sequence(t: Tree) -> tuple:
    return per_node_sequences(t)[t.root]


def feasible(t: Tree, a: int, b: int) -> bool:
    s = rep_sequence(t)
    return b >= seq_value(s, min(a, len(s) - 1))


def _lr_layout(t: Tree, seqs: list, sizes: list):
    """Top-down width-optimal layout; returns (points, rule per node).

    Each pending item carries (node, alpha, beta, x, y) where (alpha, beta)
    is a feasible left/right width budget the subtree's drawing must meet.
    """
    points: dict = {}
    rules: dict = {}
    s0 = seqs[t.root]
    a0 = _argmin_index(s0)
    work = [(t.root, a0, s0[a0], 0, 0)]
    while work:
        v, alpha, beta, x, y = work.pop()
        points[v] = (x, y)
        l, r = t.left[v], t.right[v]
        if l is None and r is None:
            continue
        if l is None:
            rules[v] = LEFT  # empty left box; child sits aligned below
            work.append((r, alpha, beta, x, y - 1))
            continue
        if r is None:
            rules[v] = RIGHT
            work.append((l, alpha, beta, x, y - 1))
            continue
        wl = min_width(seqs[l])
        if wl <= alpha:
            rules[v] = LEFT
            al = _argmin_index(seqs[l])
            bl = seqs[l][al]
            work.append((l, al, bl, x - bl - 1, y - 1))
            work.append((r, alpha, beta, x, y - 1 - sizes[l]))
        else:
            rules[v] = RIGHT
            ar = _argmin_index(seqs[r])
            br = seqs[r][ar]
            work.append((r, ar, br, x + ar + 1, y - 1))
            work.append((l, alpha, beta, x, y - 1 - sizes[r]))
    return points, rules


def optimal_lr_drawing(t: Tree) -> GridDrawing:
    points, _ = _lr_layout(t, per_node_sequences(t), subtree_sizes(t))
    return GridDrawing(points, LR)


def lr_rules(t: Tree) -> dict:
    """Rule (LEFT/RIGHT) applied at each internal node of the optimal layout."""
    _, rules = _lr_layout(t, per_node_sequences(t), subtree_sizes(t))
    return rules


def rule_widths(lab, rab, rule: str) -> tuple:
    """(left width, right width) at a node from its children's width pairs.

    lab / rab are (a, b) pairs or None for an absent subtree; rule is the
    drawing rule applied at the node.
    """
    if lab is not None and rab is not None:
        if rule == LEFT:
            return max(lab[0] + lab[1] + 1, rab[0]), rab[1]
        return lab[0], max(rab[0] + rab[1] + 1, lab[1])
    if lab is not None:
        # left rule pushes the lone left subtree fully left of the root
        if rule == LEFT:
            return lab[0] + lab[1] + 1, 0
        return lab
    if rab is not None:
        if rule == LEFT:
            return rab
        return 0, rab[0] + rab[1] + 1
    return 0, 0


def per_node_widths(t: Tree, rules: dict) -> list:
    """widths[v] = width of the subtree's drawing under the given rules."""
    ab: list = [None] * t.n
    for v in postorder(t):
        l, r = t.left[v], t.right[v]
        ab[v] = rule_widths(
            ab[l] if l is not None else None,
            ab[r] if r is not None else None,
            rules.get(v, LEFT),
        )
    return [a + b + 1 for a, b in ab]


def brute_force_min_width(t: Tree) -> int:
    """Enumerate every left/right rule assignment and lay each one out.

    Oracle only; rejects trees with more than 20 internal nodes.
    """
    internal = [v for v in range(t.n) if not t.is_leaf(v)]
    if len(internal) > 20:
        raise ValueError("too many internal nodes for brute force")
    order = [v for v in postorder(t) if not t.is_leaf(v)]
    pos = {v: i for i, v in enumerate(internal)}
    best = t.n + 1  # width never exceeds n
    for mask in range(1 << len(internal)):
        a = [0] * t.n
        b = [0] * t.n
        for v in order:
            use_left = not (mask >> pos[v]) & 1
            l, r = t.left[v], t.right[v]
            if l is not None and r is not None:
                if use_left:
                    av = max(a[l] + b[l] + 1, a[r])
                    bv = b[r]
                else:
                    av = a[l]
                    bv = max(a[r] + b[r] + 1, b[l])
            elif l is not None:
                # left rule puts the lone left subtree fully left of the root
                if use_left:
                    av, bv = a[l] + b[l] + 1, 0
                else:
                    av, bv = a[l], b[l]
            else:
                if use_left:
                    av, bv = a[r], b[r]
                else:
                    av, bv = 0, a[r] + b[r] + 1
            a[v], b[v] = av, bv
        w = a[t.root] + b[t.root] + 1
        if w < best:
            best = w
    return best
