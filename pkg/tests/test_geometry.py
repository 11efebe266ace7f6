from lrdraw.geometry import (
    crossing_pairs,
    cyclic_ccw,
    on_segment_interior,
    orient,
    point_in_polygon,
    point_on_any_segment,
    ray_hits_interior,
    segments_conflict,
)


def test_orient():
    assert orient((0, 0), (1, 0), (0, 1)) == 1
    assert orient((0, 0), (0, 1), (1, 0)) == -1
    assert orient((0, 0), (1, 1), (2, 2)) == 0


def test_on_segment_interior():
    assert on_segment_interior((1, 1), (0, 0), (2, 2))
    assert not on_segment_interior((0, 0), (0, 0), (2, 2))
    assert not on_segment_interior((2, 2), (0, 0), (2, 2))
    assert not on_segment_interior((3, 3), (0, 0), (2, 2))
    assert not on_segment_interior((1, 2), (0, 0), (2, 2))


def test_segments_conflict():
    # proper crossing
    assert segments_conflict((0, 0), (2, 2), (0, 2), (2, 0))
    # shared endpoint only: fine
    assert not segments_conflict((0, 0), (1, 1), (1, 1), (2, 0))
    # T-junction: endpoint interior to the other
    assert segments_conflict((0, 0), (2, 0), (1, 0), (1, 2))
    # collinear overlap
    assert segments_conflict((0, 0), (3, 0), (1, 0), (2, 0))
    # identical
    assert segments_conflict((0, 0), (1, 0), (1, 0), (0, 0))
    # disjoint
    assert not segments_conflict((0, 0), (1, 0), (0, 1), (1, 1))


def test_crossing_pairs():
    segs = [((0, 0), (2, 2)), ((0, 2), (2, 0)), ((5, 5), (6, 6))]
    assert crossing_pairs(segs, limit=5) == [(0, 1)]
    assert crossing_pairs([((0, 0), (1, 0)), ((0, 1), (1, 1))]) == []


def test_point_on_any_segment():
    pts = [(1, 1), (0, 0), (5, 5)]
    segs = [((0, 0), (3, 3)), ((0, 1), (1, 0))]
    assert point_on_any_segment(pts, segs, limit=5) == [(0, 0)]
    # diagonal with no interior lattice points
    assert point_on_any_segment([(1, 1)], [((0, 0), (3, 2))]) == []


def test_point_in_polygon():
    square = [(0, 0), (4, 0), (4, 4), (0, 4)]
    assert point_in_polygon((2, 2), square)
    assert not point_in_polygon((5, 2), square)
    assert not point_in_polygon((0, 0), square)
    assert not point_in_polygon((2, 0), square)
    concave = [(0, 0), (6, 0), (6, 6), (3, 2), (0, 6)]
    assert not point_in_polygon((3, 5), concave)
    assert point_in_polygon((1, 2), concave)


def test_cyclic_ccw():
    a, b, c = (1, 0), (0, 1), (-1, 0)
    assert cyclic_ccw(a, b, c)
    assert not cyclic_ccw(a, c, b)
    assert not cyclic_ccw(a, a, b)


def test_ray_hits_interior():
    assert ray_hits_interior((0, 0), (1, 0), (2, -1), (2, 1))
    assert not ray_hits_interior((0, 0), (-1, 0), (2, -1), (2, 1))
    # through an endpoint does not count
    assert not ray_hits_interior((0, 0), (1, 0), (2, 0), (2, 5))
    # collinear segment ahead blocks
    assert ray_hits_interior((0, 0), (1, 0), (2, 0), (5, 0))
    assert not ray_hits_interior((0, 0), (1, 0), (-5, 0), (-2, 0))
