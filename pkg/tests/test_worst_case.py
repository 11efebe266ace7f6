from collections import deque

import pytest

from lrdraw.lr_opt import min_width, rep_sequence
from lrdraw.tree_model import all_trees, parse_tree, random_tree
from lrdraw.worst_case import (
    FrontierSet,
    checkpoint_load,
    checkpoint_save,
    dominates,
    fit_power_law,
    frontier_extend,
    lower_bound_tree,
    min_nodes_table,
    node_count_bound_check,
    pi_sequence,
    ruler_sequence,
)


def test_ruler_sequence():
    assert ruler_sequence(1) == [1]
    assert ruler_sequence(2) == [1, 2, 1]
    assert ruler_sequence(4) == [1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1]
    s = ruler_sequence(6)
    assert len(s) == 2**6 - 1
    # values[i] = exponent of the largest power of 2 dividing i+1... times 2
    for i, v in enumerate(s):
        k = i + 1
        e = 0
        while k % 2 == 0:
            k //= 2
            e += 1
        assert v == e + 1
    with pytest.raises(ValueError):
        ruler_sequence(0)


def test_pi_sequence():
    assert pi_sequence(1) == [1]
    assert pi_sequence(4) == [1, 3, 1, 7, 1, 3, 1, 15, 1, 3, 1, 7, 1, 3, 1]


def test_pi_sigma_identity():
    for level in range(1, 13):
        sigma = ruler_sequence(level)
        assert pi_sequence(level) == [2**v - 1 for v in sigma]


def test_pi_window_property():
    # every window of x consecutive elements has maximum >= x
    for level in range(1, 11):
        pi = pi_sequence(level)
        for x in range(1, len(pi) + 1):
            window: deque = deque()
            ok = True
            for i, v in enumerate(pi):
                while window and pi[window[-1]] <= v:
                    window.pop()
                window.append(i)
                if window[0] <= i - x:
                    window.popleft()
                if i >= x - 1 and pi[window[0]] < x:
                    ok = False
                    break
            assert ok, (level, x)


def test_lower_bound_tree_counts():
    assert lower_bound_tree(1).n == 1
    assert lower_bound_tree(2).n == 7
    assert lower_bound_tree(3).n == 39
    assert lower_bound_tree(4).n == 207
    with pytest.raises(ValueError):
        lower_bound_tree(0)


def test_lower_bound_tree_width():
    for h in range(1, 5):
        w = min_width(rep_sequence(lower_bound_tree(h)))
        assert w >= 2**h - 1


def test_node_count_bound():
    for h in range(1, 9):
        assert node_count_bound_check(h)


def test_dominates_examples():
    a = (3, (1, 0))
    b = (3, (0,))
    assert dominates(a, a)
    assert dominates(a, b)
    assert not dominates(b, a)


def test_dominates_preorder():
    import random

    rng = random.Random(0)
    pool = []
    for _ in range(60):
        k = rng.randint(1, 5)
        seq = sorted((rng.randint(0, 6) for _ in range(k)), reverse=True)
        seq = tuple(seq[:-1] + [0])
        pool.append((rng.randint(1, 30), seq))
    for a in pool:
        assert dominates(a, a)
    for a in pool:
        for b in pool:
            for c in pool:
                if dominates(a, b) and dominates(b, c):
                    assert dominates(a, c)


def test_width_domination():
    import random

    rng = random.Random(1)
    pool = []
    for _ in range(80):
        k = rng.randint(1, 6)
        seq = sorted((rng.randint(0, 8) for _ in range(k)), reverse=True)
        pool.append((rng.randint(1, 40), tuple(seq[:-1] + [0])))
    for a in pool:
        for b in pool:
            if dominates(a, b):
                assert min_width(a[1]) >= min_width(b[1])


def test_frontier_basics():
    f = FrontierSet()
    frontier_extend(f, 1)
    entries = list(f.entries())
    assert len(entries) == 1 and entries[0].n == 1 and entries[0].seq == (0,)
    frontier_extend(f, 2)
    frontier_extend(f, 3)
    assert any(e.n == 3 and e.seq == (1, 0) for e in f.entries())
    # antichain invariant
    es = [(e.n, e.seq) for e in f.entries()]
    for a in es:
        for b in es:
            if a != b:
                assert not dominates(a, b)


def test_frontier_exhaustive_oracle():
    # every tree with n <= 11 is dominated by some frontier entry, and
    # the per-n max width matches the frontier-derived value
    f = FrontierSet()
    for n in range(1, 12):
        frontier_extend(f, n)
    entries = [(e.n, e.seq) for e in f.entries()]
    for n in range(1, 12):
        best = 0
        for t in all_trees(n):
            s = rep_sequence(t)
            best = max(best, min_width(s))
            assert any(dominates(e, (n, s)) for e in entries if e[0] <= n)
        fbest = max(
            min_width(e.seq) for e in f.entries() if e.n <= n
        )
        assert fbest == best


def test_min_nodes_table_small():
    assert min_nodes_table(3) == [(1, 1), (2, 3)]
    table = min_nodes_table(11)
    assert (4, 11) in table
    assert table == [(1, 1), (2, 3), (3, 7), (4, 11)]
    with pytest.raises(ValueError):
        min_nodes_table(0)


def test_checkpoint_round_trip(tmp_path):
    path = str(tmp_path / "ck.txt")
    t1 = min_nodes_table(11, checkpoint=path)
    f = checkpoint_load(path)
    keys = {(e.n, e.seq) for e in f.entries()}
    t2 = min_nodes_table(19, resume_from=f)
    assert t2 == min_nodes_table(19)
    f2 = checkpoint_load(path)
    assert {(e.n, e.seq) for e in f2.entries()} >= keys
    assert t1 == [(1, 1), (2, 3), (3, 7), (4, 11)]


def test_fit_power_law_synthetic():
    table = [(round(2 * n**0.5, 6), n) for n in (1, 4, 9, 16, 25, 36)]
    a, b, c = fit_power_law(table)
    assert abs(b - 0.5) < 1e-3
    table = [(1.54 * n**0.443 - 0.55, n) for n in range(1, 30)]
    a, b, c = fit_power_law(table)
    assert abs(a - 1.54) < 1e-2
    assert abs(b - 0.443) < 1e-2
    assert abs(c + 0.55) < 1e-2


def test_fit_power_law_errors():
    with pytest.raises(ValueError):
        fit_power_law([(1, 1), (2, 3)])
    with pytest.raises(ValueError):
        fit_power_law([(1, 5), (2, 5), (3, 5), (4, 5)])
