"""Exact integer geometric predicates; no epsilon anywhere."""

from __future__ import annotations

import math


def orient(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def on_segment_interior(p, a, b) -> bool:
    """p strictly between a and b on the segment ab."""
    if p == a or p == b:
        return False
    if orient(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_conflict(a, b, c, d) -> bool:
    """True when the closed segments share a point interior to either one.

    Meeting at a common endpoint is fine; anything else is not.
    """
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if (
        on_segment_interior(c, a, b)
        or on_segment_interior(d, a, b)
        or on_segment_interior(a, c, d)
        or on_segment_interior(b, c, d)
    ):
        return True
    # identical segments overlap without either endpoint strictly inside
    return {a, b} == {c, d}


def _column_buckets(segments):
    buckets: dict = {}
    for i, (p, q) in enumerate(segments):
        for col in range(min(p[0], q[0]), max(p[0], q[0]) + 1):
            buckets.setdefault(col, []).append(i)
    return buckets


def crossing_pairs(segments, limit: int = 1):
    """Indices of segment pairs in conflict, up to limit pairs.

    segments: list of (p, q) integer point pairs.  Candidate pairs come
    from shared grid columns plus y-interval overlap, so mostly-disjoint
    inputs stay near linear.
    """
    found = []
    seen = set()
    yr = [
        (min(p[1], q[1]), max(p[1], q[1]))
        for p, q in segments
    ]
    for bucket in _column_buckets(segments).values():
        bucket.sort(key=lambda i: yr[i][0])
        active: list = []
        for i in bucket:
            lo = yr[i][0]
            active = [j for j in active if yr[j][1] >= lo]
            for j in active:
                key = (min(i, j), max(i, j))
                if key in seen:
                    continue
                seen.add(key)
                if segments_conflict(*segments[i], *segments[j]):
                    found.append(key)
                    if len(found) >= limit:
                        return found
            active.append(i)
    return found


def point_on_any_segment(points, segments, limit: int = 1):
    """(point index, segment index) pairs with the point strictly inside.

    Walks the interior lattice points of each segment (gcd many) and
    looks them up in the point set, so cost tracks total edge length
    rather than points x segments.
    """
    idx: dict = {}
    for pi, p in enumerate(points):
        idx.setdefault(p, pi)
    found = []
    for si, ((ax, ay), (bx, by)) in enumerate(segments):
        g = math.gcd(abs(bx - ax), abs(by - ay))
        if g <= 1:
            continue
        sx = (bx - ax) // g
        sy = (by - ay) // g
        for k in range(1, g):
            pi = idx.get((ax + k * sx, ay + k * sy))
            if pi is not None:
                found.append((pi, si))
                if len(found) >= limit:
                    return found
    return found


def point_in_polygon(p, poly) -> bool:
    """Even-odd test, p strictly inside the simple polygon poly.

    Points on the boundary report False.
    """
    for i in range(len(poly)):
        a, b = poly[i], poly[(i + 1) % len(poly)]
        if p == a or on_segment_interior(p, a, b):
            return False
    inside = False
    x, y = p
    for i in range(len(poly)):
        (ax, ay), (bx, by) = poly[i], poly[(i + 1) % len(poly)]
        if (ay > y) != (by > y):
            # x coordinate of the edge at height y, compared exactly
            # via the sign of a cross product
            t = (bx - ax) * (y - ay) - (by - ay) * (x - ax)
            if by < ay:
                t = -t
            if t > 0:
                inside = not inside
    return inside


def _dir_class(base, d) -> int:
    cr = base[0] * d[1] - base[1] * d[0]
    if cr > 0:
        return 1
    if cr < 0:
        return 3
    return 0 if base[0] * d[0] + base[1] * d[1] > 0 else 2


def cyclic_ccw(a, b, c) -> bool:
    """b strictly precedes c when sweeping counter-clockwise from a.

    a, b, c are nonzero direction vectors; coincident directions fail.
    """
    cb, cc = _dir_class(a, b), _dir_class(a, c)
    if cb == 0 or cc == 0:
        return False
    if cb != cc:
        return cb < cc
    return b[0] * c[1] - b[1] * c[0] > 0


def ray_hits_interior(v, d, a, b) -> bool:
    """Does the open ray v + t*d (t > 0) meet the interior of segment ab?

    Passing through an endpoint of ab does not count.
    """
    w = (v[0] + d[0], v[1] + d[1])
    oa = orient(v, w, a)
    ob = orient(v, w, b)
    if oa == 0 and ob == 0:
        # segment lies on the ray's line; blocked if its interior
        # reaches the positive side
        ta = (a[0] - v[0]) * d[0] + (a[1] - v[1]) * d[1]
        tb = (b[0] - v[0]) * d[0] + (b[1] - v[1]) * d[1]
        return max(ta, tb) > 0
    if oa * ob >= 0:
        return False
    # the line through the ray crosses the open segment; the crossing is
    # at parameter t = s / (s - s2) along d
    s = (b[0] - a[0]) * (v[1] - a[1]) - (b[1] - a[1]) * (v[0] - a[0])
    s2 = (b[0] - a[0]) * (w[1] - a[1]) - (b[1] - a[1]) * (w[0] - a[0])
    return s * (s - s2) > 0
