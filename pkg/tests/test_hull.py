import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.spatial import ConvexHull

from farmarb.hull import DegenerateHullError, contains, convex_hull, facet_census
from farmarb.semigroup import polyhedron_vertices

pts3 = st.tuples(*[st.integers(-5, 5)] * 3)


def scipy_planes(points):
    h = ConvexHull(np.array(points, dtype=float))
    planes = set()
    for eq in h.equations:
        planes.add(tuple(np.round(eq / np.abs(eq[:3]).max(), 6)))
    return len(planes), sorted(set(int(i) for i in h.vertices))


def test_cube():
    cube = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    c = facet_census(cube)
    assert c["facets"] == 6 and c["quadrilaterals"] == 6


def test_polyhedron_census():
    c = facet_census(polyhedron_vertices())
    assert (c["quadrilaterals"], c["triangles"], c["extreme_vertices"]) == (6, 8, 12)


def test_polyhedron_against_scipy():
    pts = polyhedron_vertices()
    n_planes, verts = scipy_planes(pts)
    facets = convex_hull(pts)
    assert len(facets) == n_planes
    assert sorted({i for f in facets for i in f.corners}) == verts


@given(st.lists(pts3, min_size=5, max_size=12, unique=True))
def test_random_against_scipy(points):
    try:
        facets = convex_hull(points)
    except DegenerateHullError:
        return
    n_planes, verts = scipy_planes(points)
    assert len(facets) == n_planes
    assert sorted({i for f in facets for i in f.corners}) == verts
    assert all(contains(facets, p) for p in points)


def test_coplanar_rejected():
    with pytest.raises(DegenerateHullError):
        convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
