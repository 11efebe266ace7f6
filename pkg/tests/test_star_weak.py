from lrdraw.drawing import BELL_LIKE, FLAT
from lrdraw.lr_opt import min_width, rep_sequence
from lrdraw.star_weak import bell_like_drawing, flat_drawing
from lrdraw.tree_model import all_trees, parse_tree, path_tree, random_tree
from lrdraw.verify import is_bell_like, is_flat, is_star_shaped


def _check(t, bell=True):
    d = bell_like_drawing(t) if bell else flat_drawing(t)
    omega = min_width(rep_sequence(t))
    bound = max(1, 4 * omega - 2) if bell else 4 * omega
    assert d.width <= bound, (d.width, bound)
    assert d.height <= t.n
    assert d.kind == (BELL_LIKE if bell else FLAT)
    assert is_star_shaped(t, d).ok
    kind = is_bell_like(t, d) if bell else is_flat(t, d)
    assert kind.ok
    return d


def test_single_node():
    d = _check(parse_tree("(..)"), bell=True)
    assert d.width == 1
    d = _check(parse_tree("(..)"), bell=False)
    assert d.width == 1


def test_paths():
    # root-to-leaf paths have omega = 1: bell width <= 2, flat <= 4
    for dirs in ("RRRRRR", "LLLLLL", "RLRLRL", "LRLRLR", "RRLLRR"):
        t = path_tree(7, dirs)
        d = _check(t, bell=True)
        assert d.width <= 2
        _check(t, bell=False)


def test_exhaustive_small():
    for n in range(1, 9):
        for t in all_trees(n):
            _check(t, bell=True)
            _check(t, bell=False)


def test_random():
    for i in range(120):
        t = random_tree(1 + (i * 13) % 200, seed=8000 + i)
        _check(t, bell=True)
        _check(t, bell=False)


def test_exhaustive_star_check_small():
    # the quadratic polygon-pair check on a sample of small trees
    for n in (5, 7):
        for k, t in enumerate(all_trees(n)):
            if k % 7:
                continue
            for d in (bell_like_drawing(t), flat_drawing(t)):
                assert is_star_shaped(t, d, exhaustive=True).ok
