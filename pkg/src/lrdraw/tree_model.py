"""Ordered rooted binary trees, their text form, and generators."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterator, Optional

LEFT = "L"
RIGHT = "R"


@dataclass(frozen=True)
class Tree:
    """An ordered rooted binary tree over dense node indices 0..n-1.

    left[i] / right[i] hold the child index or None.  The left/right
    designation is part of the value: mirror images are distinct trees.
    """

    left: tuple
    right: tuple
    root: int

    @property
    def n(self) -> int:
        return len(self.left)

    def children(self, v: int):
        return self.left[v], self.right[v]

    def is_leaf(self, v: int) -> bool:
        return self.left[v] is None and self.right[v] is None


@dataclass(frozen=True)
class NodePath:
    nodes: tuple
    directions: tuple  # one entry over {LEFT, RIGHT} per consecutive pair


class TreeSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def parse_tree(text: str) -> Tree:
    """Parse the grammar  T := "." | "(" T T ")"  ignoring whitespace.

    "." alone is rejected: the empty tree is not a Tree value.
    """
    left: list = []
    right: list = []
    # stack of (node index, slot) where slot 0 = expecting left, 1 = right
    stack: list = []
    result: Optional[int] = None
    i = 0
    ln = len(text)

    def attach(child: Optional[int], offset: int) -> None:
        nonlocal result
        if not stack:
            if result is not None:
                raise TreeSyntaxError("trailing content after tree", offset)
            if child is None:
                raise TreeSyntaxError("the empty tree is not representable", offset)
            result = child
            return
        node, slot = stack[-1]
        if slot == 0:
            left[node] = child
            stack[-1] = (node, 1)
        elif slot == 1:
            right[node] = child
            stack[-1] = (node, 2)
        else:
            raise TreeSyntaxError("node has more than two subtrees", offset)

    while i < ln:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "(":
            left.append(None)
            right.append(None)
            stack.append((len(left) - 1, 0))
        elif c == ".":
            attach(None, i)
        elif c == ")":
            if not stack:
                raise TreeSyntaxError("unmatched ')'", i)
            node, slot = stack.pop()
            if slot != 2:
                raise TreeSyntaxError("node needs exactly two subtrees", i)
            attach(node, i)
        else:
            raise TreeSyntaxError(f"unexpected character {c!r}", i)
        i += 1

    if stack:
        raise TreeSyntaxError("unclosed '('", ln)
    if result is None:
        raise TreeSyntaxError("empty input", ln)
    return Tree(tuple(left), tuple(right), result)


def serialize_tree(t: Tree) -> str:
    out: list = []
    # explicit stack; trees can be deep paths
    work: list = [t.root]
    while work:
        v = work.pop()
        if v is None:
            out.append(".")
        elif isinstance(v, str):
            out.append(v)
        else:
            out.append("(")
            work.append(")")
            work.append(t.right[v])
            work.append(t.left[v])
    return "".join(out)


def join(left_sub: Optional[Tree], right_sub: Optional[Tree]) -> Tree:
    """New tree: fresh root with the given subtrees (either may be None)."""
    left: list = [None]
    right: list = [None]

    def copy_in(sub: Tree) -> int:
        base = len(left)
        for l, r in zip(sub.left, sub.right):
            left.append(None if l is None else l + base)
            right.append(None if r is None else r + base)
        return sub.root + base

    if left_sub is not None:
        left[0] = copy_in(left_sub)
    if right_sub is not None:
        right[0] = copy_in(right_sub)
    return Tree(tuple(left), tuple(right), 0)


def complete_tree(height: int) -> Tree:
    if height < 1:
        raise ValueError("height must be >= 1")
    t = join(None, None)
    for _ in range(height - 1):
        t = join(t, t)
    return t


def mirror(t: Tree) -> Tree:
    return Tree(t.right, t.left, t.root)


def subtree_sizes(t: Tree) -> list:
    """sizes[v] = node count of the subtree rooted at v."""
    sizes = [1] * t.n
    for v in postorder(t):
        l, r = t.left[v], t.right[v]
        if l is not None:
            sizes[v] += sizes[l]
        if r is not None:
            sizes[v] += sizes[r]
    return sizes


def postorder(t: Tree, start: Optional[int] = None) -> Iterator[int]:
    """Iterative postorder over the subtree rooted at start (default root)."""
    work = [(t.root if start is None else start, False)]
    while work:
        v, expanded = work.pop()
        if expanded:
            yield v
            continue
        work.append((v, True))
        if t.right[v] is not None:
            work.append((t.right[v], False))
        if t.left[v] is not None:
            work.append((t.left[v], False))


def subtree_nodes(t: Tree, v: int) -> list:
    return list(postorder(t, v))


# -- uniform random generation ------------------------------------------------

_catalan_cache = [1]


def _catalan(n: int) -> int:
    while len(_catalan_cache) <= n:
        k = len(_catalan_cache) - 1
        _catalan_cache.append(_catalan_cache[-1] * 2 * (2 * k + 1) // (k + 2))
    return _catalan_cache[n]


class _CounterRng:
    """Counter-based deterministic bit source: value i is a hash of (seed, i)."""

    def __init__(self, seed: int):
        self.seed = seed
        self.counter = 0

    def bits(self, k: int) -> int:
        out = 0
        got = 0
        while got < k:
            h = hashlib.blake2b(
                b"%d:%d" % (self.seed, self.counter), digest_size=16
            ).digest()
            self.counter += 1
            out = (out << 128) | int.from_bytes(h, "big")
            got += 128
        return out >> (got - k)

    def below(self, bound: int) -> int:
        # rejection sampling keeps the draw exactly uniform
        k = bound.bit_length()
        while True:
            v = self.bits(k)
            if v < bound:
                return v


def random_tree(n: int, seed: int = 0) -> Tree:
    """Uniform over the Catalan(n) ordered binary trees with n nodes."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _catalan(n)
    rng = _CounterRng(seed)
    left: list = [None] * n
    right: list = [None] * n
    next_idx = 1
    # (node, remaining size) pending expansion
    work = [(0, n)]
    while work:
        v, m = work.pop()
        if m == 1:
            continue
        # left subtree size i has weight C(i) * C(m-1-i); the weights sum
        # to C(m).  Scan from both ends: the mass concentrates there, so
        # the expected number of terms inspected is O(1).
        r = rng.below(_catalan(m))
        order = []
        lo, hi = 0, m - 1
        while lo <= hi:
            order.append(lo)
            if hi != lo:
                order.append(hi)
            lo += 1
            hi -= 1
        i = m - 1
        for cand in order:
            w = _catalan(cand) * _catalan(m - 1 - cand)
            if r < w:
                i = cand
                break
            r -= w
        else:  # pragma: no cover - the weights sum exactly to C(m)
            raise AssertionError("catalan weights do not sum")
        if i > 0:
            left[v] = next_idx
            work.append((next_idx, i))
            next_idx += 1
        if m - 1 - i > 0:
            right[v] = next_idx
            work.append((next_idx, m - 1 - i))
            next_idx += 1
    return Tree(tuple(left), tuple(right), 0)


def path_tree(n: int, directions: str = "") -> Tree:
    """A root-to-leaf path of n nodes; directions[i] in {L,R} picks the child
    slot at depth i (default all left)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    left = [None] * n
    right = [None] * n
    for i in range(n - 1):
        d = directions[i] if i < len(directions) else LEFT
        if d == RIGHT:
            right[i] = i + 1
        else:
            left[i] = i + 1
    return Tree(tuple(left), tuple(right), 0)


# -- paths --------------------------------------------------------------------


def _walk(t: Tree, start: int, first: str, then: str) -> NodePath:
    nodes = [start]
    dirs: list = []
    step = first
    while True:
        v = nodes[-1]
        nxt = t.left[v] if step == LEFT else t.right[v]
        if nxt is None:
            break
        nodes.append(nxt)
        dirs.append(step)
        step = then
    return NodePath(tuple(nodes), tuple(dirs))


def leftmost_path(t: Tree) -> NodePath:
    return _walk(t, t.root, LEFT, LEFT)


def rightmost_path(t: Tree) -> NodePath:
    return _walk(t, t.root, RIGHT, RIGHT)


def left_right_path(t: Tree, s: int) -> NodePath:
    return _walk(t, s, LEFT, RIGHT)


def right_left_path(t: Tree, s: int) -> NodePath:
    return _walk(t, s, RIGHT, LEFT)


def all_trees(n: int) -> Iterator[Tree]:
    """Every ordered binary tree with n nodes, in a deterministic order."""
    for shape in _shapes(n):
        yield parse_tree(shape)


def _shapes(n: int) -> Iterator[str]:
    if n == 0:
        yield "."
        return
    for i in range(n):
        for l in _shapes(i):
            for r in _shapes(n - 1 - i):
                yield "(" + l + r + ")"
