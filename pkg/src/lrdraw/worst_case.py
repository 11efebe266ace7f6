"""Lower-bound tree family and the dominance-frontier enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .lr_opt import combine_sequences, min_width
from .tree_model import Tree, join


def ruler_sequence(level: int) -> list:
    """sigma_1 = [1]; sigma_l = sigma_{l-1} + [l] + sigma_{l-1}."""
    if level < 1:
        raise ValueError("level must be >= 1")
    s = [1]
    for l in range(2, level + 1):
        s = s + [l] + s
    return s


def pi_sequence(level: int) -> list:
    """pi_1 = [1]; pi_l = pi_{l-1} + [2^l - 1] + pi_{l-1}."""
    if level < 1:
        raise ValueError("level must be >= 1")
    s = [1]
    for l in range(2, level + 1):
        s = s + [2**l - 1] + s
    return s


def lower_bound_tree(h: int) -> Tree:
    """The h-th member of the family forcing LR-width at least 2^h - 1."""
    if h < 1:
        raise ValueError("h must be >= 1")
    memo: dict = {1: join(None, None)}

    def build(level: int) -> Tree:
        if level in memo:
            return memo[level]
        prev = build(level - 1)
        sigma = ruler_sequence(level - 1)
        k = 2 ** (level - 1)
        # spine u_1, v_1, ..., u_{k-1}, v_{k-1}, u_k built bottom-up;
        # v_i is the right child of u_i, u_{i+1} the left child of v_i
        cur = join(prev, prev)  # u_k
        for i in range(k - 1, 0, -1):
            side = build(sigma[i - 1])
            v = join(cur, side)
            cur = join(side, v)
        memo[level] = cur
        return cur

    return build(h)


def node_count_bound_check(h: int) -> bool:
    """|T_h| <= (3 + sqrt5)^h, decided without floating point."""
    n = lower_bound_tree(h).n
    # (3 + sqrt5)^h = a + b*sqrt5 with integers a, b >= 0
    a, b = 1, 0
    for _ in range(h):
        a, b = 3 * a + 5 * b, a + 3 * b
    if n <= a:
        return True
    return (n - a) ** 2 <= 5 * b * b


@dataclass
class Entry:
    n: int
    seq: tuple
    witness: Tree


def dominates(a, b) -> bool:
    """(n, seq) order: a beats b if it is no larger and entrywise no worse."""
    na, sa = a
    nb, sb = b
    if na > nb or len(sa) < len(sb):
        return False
    return all(sa[i] >= sb[i] for i in range(len(sb)))


class FrontierSet:
    """Antichain of (node count, sequence) pairs with witness trees.

    Entries are bucketed by node count so dominance scans only touch
    buckets on the relevant side.
    """

    def __init__(self):
        self.buckets: dict = {}  # n -> list of Entry
        self.keys: set = set()  # (n, seq) dedup

    def entries(self):
        for n in sorted(self.buckets):
            yield from self.buckets[n]

    def add(self, n: int, seq: tuple, witness: Tree) -> bool:
        if (n, seq) in self.keys:
            return False
        for m in sorted(self.buckets):
            if m > n:
                break
            for e in self.buckets[m]:
                if dominates((e.n, e.seq), (n, seq)):
                    return False
        # evict entries the newcomer dominates
        for m in sorted(self.buckets):
            if m < n:
                continue
            kept = []
            for e in self.buckets[m]:
                if dominates((n, seq), (e.n, e.seq)):
                    self.keys.discard((e.n, e.seq))
                else:
                    kept.append(e)
            self.buckets[m] = kept
        self.buckets.setdefault(n, []).append(Entry(n, seq, witness))
        self.keys.add((n, seq))
        return True


def frontier_extend(prev: FrontierSet, n: int) -> FrontierSet:
    """Grow a frontier valid for sizes < n into one valid for sizes <= n.

    Candidate n-node trees take their root subtrees from frontier
    witnesses; their sequences come from the child sequences alone.
    """
    if n == 1:
        prev.add(1, (0,), join(None, None))
        return prev
    by_size: dict = {}
    for e in prev.entries():
        by_size.setdefault(e.n, []).append(e)
    candidates = []
    for ls in sorted(by_size):
        rs = n - 1 - ls
        if rs == 0:
            for e in by_size[ls]:
                # single-subtree roots; left and right give the same sequence
                candidates.append((ls, e.seq, e, None))
            continue
        if rs not in by_size:
            continue
        for el in by_size[ls]:
            for er in by_size[rs]:
                candidates.append((ls, el.seq, el, er))
    candidates.sort(key=lambda c: (c[0], c[1], () if c[3] is None else c[3].seq))
    for _, _, el, er in candidates:
        seq = combine_sequences(el.seq, er.seq if er is not None else None)
        if (n, seq) in prev.keys:
            continue
        witness = join(el.witness, er.witness if er is not None else None)
        prev.add(n, seq, witness)
    return prev


def checkpoint_save(f: FrontierSet, path: str) -> None:
    from .tree_model import serialize_tree

    with open(path, "w", encoding="utf-8") as fh:
        for e in f.entries():
            seq = " ".join(str(v) for v in e.seq)
            fh.write(f"{e.n}, {seq}, {serialize_tree(e.witness)}\n")


def checkpoint_load(path: str) -> FrontierSet:
    from .tree_model import parse_tree

    f = FrontierSet()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            n_s, seq_s, tree_s = line.split(", ")
            e = Entry(int(n_s), tuple(int(v) for v in seq_s.split()), parse_tree(tree_s))
            f.buckets.setdefault(e.n, []).append(e)
            f.keys.add((e.n, e.seq))
    return f


def min_nodes_table(
    max_n: int,
    checkpoint: Optional[str] = None,
    resume_from: Optional[FrontierSet] = None,
) -> list:
    """(w, least n needing width w) pairs derived from the frontier."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    f = resume_from if resume_from is not None else FrontierSet()
    start = (max(f.buckets) + 1) if f.buckets else 1
    table: list = []
    seen_w = 0
    # replay widths already covered by a resumed frontier
    for n in range(1, start):
        w = max(
            (min_width(e.seq) for m in f.buckets if m <= n for e in f.buckets[m]),
            default=0,
        )
        while w > seen_w:
            seen_w += 1
            table.append((seen_w, n))
    for n in range(start, max_n + 1):
        frontier_extend(f, n)
        w = max(min_width(e.seq) for e in f.entries())
        while w > seen_w:
            seen_w += 1
            table.append((seen_w, n))
        if checkpoint is not None:
            checkpoint_save(f, checkpoint)
    return table


def fit_power_law(table: list) -> tuple:
    """Least-squares w = a * n**b + c via a grid on b.

    For each b the best (a, c) solve a 2x2 normal system in closed form.
    """
    if len(table) < 4:
        raise ValueError("need at least 4 rows")
    ns = [float(n) for _, n in table]
    ws = [float(w) for w, _ in table]
    if max(ns) == min(ns):
        raise ValueError("degenerate table: all n equal")
    m = len(ns)
    best = None
    b = 0.30
    while b <= 0.60 + 1e-12:
        xs = [n**b for n in ns]
        sx = sum(xs)
        sxx = sum(x * x for x in xs)
        sw = sum(ws)
        sxw = sum(x * w for x, w in zip(xs, ws))
        det = m * sxx - sx * sx
        if det != 0.0:
            a = (m * sxw - sx * sw) / det
            c = (sw - a * sx) / m
            err = sum((a * x + c - w) ** 2 for x, w in zip(xs, ws))
            if best is None or err < best[0]:
                best = (err, a, b, c)
        b += 1e-4
    assert best is not None
    return best[1], best[2], best[3]
