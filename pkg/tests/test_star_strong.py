import math

import pytest

import lrdraw.star_strong as ss
from lrdraw.drawing import BELL_LIKE, FLAT
from lrdraw.star_strong import (
    choose_A,
    count_switches,
    spine,
    strong_bell,
    strong_flat,
)
from lrdraw.tree_model import (
    all_trees,
    complete_tree,
    join,
    parse_tree,
    path_tree,
    random_tree,
    subtree_sizes,
)
from lrdraw.verify import is_bell_like, is_flat, is_star_shaped


def test_choose_A():
    assert choose_A(1) == 1
    assert choose_A(2) == 1
    assert choose_A(256) == 16
    assert choose_A(2**18) == 4096
    with pytest.raises(ValueError):
        choose_A(0)


def test_spine_complete_tree_descends_to_leaf():
    t = complete_tree(4)
    sp = spine(t, 14)
    # n - A = 1: every nonempty child keeps the walk going
    assert len(sp.spine) == 4
    assert t.is_leaf(sp.spine[-1])


def test_spine_path_tree():
    t = path_tree(9, "RLRLRLRL")
    # A = 8: every suffix keeps >= n - A = 1 node, spine is the whole path
    sp = spine(t, 8)
    assert len(sp.spine) == 9
    assert count_switches(sp) == 7
    # A = 4: the spine stops once the remaining suffix drops under n - A
    sp = spine(t, 4)
    assert len(sp.spine) == 5
    sp = spine(path_tree(9, "RRRRRRRR"), 4)
    assert count_switches(sp) == 0


def test_spine_boundary_enters_left():
    # |left(root)| = n - A exactly, right child smaller
    t = join(complete_tree(3), complete_tree(2))
    A = t.n - 7
    sp = spine(t, A)
    assert sp.spine[1] == t.left[t.root]


def test_spine_validation():
    t = complete_tree(3)
    with pytest.raises(ValueError):
        spine(t, 0)
    with pytest.raises(ValueError):
        spine(t, t.n)


def test_count_switches_zigzag():
    t = path_tree(6, "LRLRL")
    sp = spine(t, 5)
    # direction changes at every interior position of the spine
    assert count_switches(sp) == len(sp.spine) - 2


def _check(t, flat=True, threshold=None):
    trace: list = []
    d = (strong_flat if flat else strong_bell)(t, threshold, trace=trace)
    assert d.kind == (FLAT if flat else BELL_LIKE)
    assert d.height <= t.n
    assert is_star_shaped(t, d).ok
    assert (is_flat(t, d) if flat else is_bell_like(t, d)).ok
    # every traced call satisfied its recorded bound
    for n, A, s, case, w, bound in trace:
        assert w <= bound, (n, A, s, case, w, bound)
    return d, trace


def test_single_node():
    d, _ = _check(parse_tree("(..)"), flat=True)
    assert d.width == 1
    d, _ = _check(parse_tree("(..)"), flat=False)
    assert d.width == 1


def test_exhaustive_small():
    for n in range(1, 9):
        for t in all_trees(n):
            _check(t, flat=True)
            _check(t, flat=False)


def _corpus():
    for i in range(60):
        yield random_tree(17 + (i * 11) % 280, seed=9000 + i), 5
    # long zig-zag-ish paths force spines with many switches
    for thr in (3, 6, 9):
        for m in (40, 80, 160):
            for pat in ("RL", "LR", "RRL", "RLL"):
                yield path_tree(m, (pat * m)[: m - 1]), thr


def test_case_coverage():
    cases = set()
    for t, thr in _corpus():
        _, tr1 = _check(t, flat=True, threshold=thr)
        _, tr2 = _check(t, flat=False, threshold=thr)
        cases |= {rec[3] for rec in tr1 + tr2}
    # all six construction cases must be exercised
    assert {
        "flat-small",
        "flat-big",
        "bell-small",
        "bell-big",
        "weak-flat",
        "weak-bell",
    } <= cases


def test_zigzag_paths():
    for m in (40, 80, 160):
        t = path_tree(m, "RL" * (m // 2))
        _check(t, flat=True, threshold=6)
        _check(t, flat=False, threshold=6)


def test_bell_big_subcases():
    # both orderings of the last two switches must occur
    seen = set()
    orig = ss._bell_big

    def spy(ctx, V, v, path, sw, A):
        seen.add("consec" if sw[-2] == sw[-1] - 1 else "spaced")
        return orig(ctx, V, v, path, sw, A)

    ss._bell_big = spy
    try:
        for t, thr in _corpus():
            strong_bell(t, thr)
            strong_flat(t, thr)
    finally:
        ss._bell_big = orig
    assert seen == {"consec", "spaced"}


def test_threshold_validation():
    t = complete_tree(4)
    with pytest.raises(ValueError):
        strong_flat(t, 0)


def test_growth_smoke():
    n = 2**10
    t = random_tree(n, seed=42)
    d = strong_flat(t)
    limit = 64 * 2 ** math.sqrt(2 * math.log2(n)) * math.sqrt(math.log2(n))
    assert d.width <= limit
    assert d.height <= n


def test_weak_floor_sizes():
    # at or below the floor the weak construction is used directly
    for n in (1, 5, 16):
        t = random_tree(n, seed=n)
        _, trace = _check(t, flat=True)
        assert [rec[3] for rec in trace] == ["weak-flat"]
