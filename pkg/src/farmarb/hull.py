"""Exact convex hull of a small set of integer points in 3D.

Brute force over point triples: fine for a dozen points and free of any
floating-point tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import List, Sequence, Tuple


class DegenerateHullError(ValueError):
    pass


@dataclass(frozen=True)
class Facet:
    normal: tuple  # primitive integer outward normal
    offset: int  # normal . x <= offset on the hull
    corners: tuple  # indices of the polygon's corners


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _primitive(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return tuple(x // g for x in v)


def _polygon_corners(points: Sequence[tuple], idx: List[int], normal: tuple) -> tuple:
    # project along the dominant normal axis; projection keeps convexity
    drop = max(range(3), key=lambda i: abs(normal[i]))
    keep = [i for i in range(3) if i != drop]
    pts = sorted(set((points[i][keep[0]], points[i][keep[1]], i) for i in idx))

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    return tuple(p[2] for p in ring)


def convex_hull(points: Sequence[Sequence[int]]) -> List[Facet]:
    pts = [tuple(int(x) for x in p) for p in points]
    if len(pts) < 4:
        raise DegenerateHullError("need at least four points")
    base = pts[0]
    if not any(_dot(_sub(a, base), _cross(_sub(b, base), _sub(c, base)))
               for a, b, c in combinations(pts[1:], 3)):
        raise DegenerateHullError("points are coplanar")
    facets = {}
    for i, j, k in combinations(range(len(pts)), 3):
        normal = _cross(_sub(pts[j], pts[i]), _sub(pts[k], pts[i]))
        if normal == (0, 0, 0):
            continue
        normal = _primitive(normal)
        sides = [_dot(normal, _sub(p, pts[i])) for p in pts]
        if all(s <= 0 for s in sides):
            pass
        elif all(s >= 0 for s in sides):
            normal = tuple(-x for x in normal)
        else:
            continue
        offset = _dot(normal, pts[i])
        if normal in facets:
            continue
        on_plane = [m for m, p in enumerate(pts) if _dot(normal, p) == offset]
        facets[normal] = Facet(normal, offset, _polygon_corners(pts, on_plane, normal))
    return sorted(facets.values(), key=lambda f: f.normal)


def facet_census(points) -> dict:
    facets = convex_hull(points)
    sizes = {}
    for f in facets:
        sizes[len(f.corners)] = sizes.get(len(f.corners), 0) + 1
    extreme = sorted({c for f in facets for c in f.corners})
    return {
        "facets": len(facets),
        "by_size": dict(sorted(sizes.items())),
        "quadrilaterals": sizes.get(4, 0),
        "triangles": sizes.get(3, 0),
        "extreme_vertices": len(extreme),
    }


def contains(facets: Sequence[Facet], x: Sequence) -> bool:
    return all(_dot(f.normal, x) <= f.offset for f in facets)


def independent_triple(points) -> Tuple[int, int, int]:
    """Indices of three linearly independent points, or raise."""
    pts = [tuple(p) for p in points]
    for a, b, c in combinations(range(len(pts)), 3):
        if _dot(pts[a], _cross(pts[b], pts[c])) != 0:
            return a, b, c
    raise DegenerateHullError("points span less than three dimensions")
