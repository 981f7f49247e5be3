import pytest

import nsenum


def lone_tetrahedron():
    return nsenum.Triangulation.from_text("tri 1\nb b b b\n")


def test_lone_tetrahedron_surfaces():
    t = lone_tetrahedron()
    r = nsenum.enumerate(t)
    assert r["sigma"] == 7
    # Four triangles and three quads, each a single piece.
    assert sorted(r["surfaces"]) == sorted(
        [[int(i == j) for i in range(7)] for j in range(7)]
    )
    for v in r["surfaces"]:
        assert nsenum.is_admissible(v)
        assert nsenum.euler_char(v, t) == 1


def test_pathological_family():
    x = nsenum.x_k(1)
    assert x.size == 4
    assert x.is_closed() and x.is_valid() and x.is_connected()
    assert x.homology() == (0, [])
    assert x.vertex_count() == 2
    assert nsenum.sigma(x) == 18
    assert nsenum.sigma(nsenum.x_k(2), threads=2) == 291


def test_block_and_equalizers():
    b = nsenum.four_block()
    assert nsenum.enumerate(b)["sigma"] == 17
    rows = nsenum.boundary_equalizers(b)
    assert len(rows) == 2
    r = nsenum.enumerate(b, extra=rows)
    assert r["sigma"] == 18
    assert r["peak_rays"] >= r["sigma"]


def test_text_round_trip():
    x = nsenum.x_k(2)
    y = nsenum.Triangulation.from_text(x.to_text())
    assert x == y
    assert x.isosig() == y.isosig()


def test_census():
    rows = nsenum.census(1)
    assert [r[0] for r in rows] == [1, 2, 3, 4]
    assert sum(r[2] for r in rows) == 8
    assert len(nsenum.generate_closed(2)) == 17
    s = nsenum.census_stats(2)
    assert s["count"] == 17
    assert s["min"] <= s["mean"] <= s["max"]


def test_bounds():
    assert nsenum.fibonacci(8) == 21
    assert nsenum.fibonacci(100) == 354224848179261915075
    assert nsenum.theorem_bound(1) == 21
    assert nsenum.hass_bound(3) == 2**21
    assert nsenum.worst_case_sigma(4) == 18
    assert nsenum.worst_case_sigma(5) is None


def test_errors():
    with pytest.raises(ValueError):
        nsenum.Triangulation.from_text("tri x\n")
    with pytest.raises(nsenum.ConstructionError):
        nsenum.x_k(0)
    with pytest.raises(nsenum.ResourceLimitExceeded):
        nsenum.enumerate(nsenum.x_k(1), max_rays=5)
    with pytest.raises(ValueError):
        nsenum.enumerate(lone_tetrahedron(), extra=[[1, 2]])


def test_verify_criterion():
    passed, name, detail = nsenum.verify(1)
    assert passed, detail
    assert name
