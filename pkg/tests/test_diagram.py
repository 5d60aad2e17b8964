import functools
import itertools

import pytest

from delannoy_adic.diagram import (
    FinitePath,
    Move,
    Vertex,
    VertexKind,
    compare_paths,
    dfs_path_counts,
    dim_between,
    enumerate_paths,
    max_path,
    min_path,
)
from delannoy_adic.errors import DomainError
from delannoy_adic.numbers import delannoy

P = FinitePath.parse


def test_parse_and_serialize_roundtrip():
    x = P("hhdv")
    assert x.moves == (Move.H, Move.H, Move.D, Move.V)
    assert str(x) == "hhdv"
    assert P("") == FinitePath()
    with pytest.raises(DomainError):
        P("hx")


def test_vertices_and_terminal():
    x = P("hdv")
    assert x.vertices == (Vertex(0, 0), Vertex(1, 0), Vertex(2, 1), Vertex(2, 2))
    assert x.terminal == Vertex(2, 2)
    h, v, d = x.counts()
    assert x.terminal == Vertex(h + d, v + d)
    assert x.level == 4


def test_center_vertex_level():
    assert Vertex(1, 2, VertexKind.CENTER).level == 4
    with pytest.raises(DomainError):
        Vertex(-1, 0)


def test_dim_between():
    assert dim_between((0, 0), (4, 3)) == delannoy(4, 3)
    assert dim_between((2, 1), (2, 1)) == 1
    assert dim_between((3, 0), (2, 5)) == 0
    # brute force: paths from (1,1) to (3,2) are paths to (2,1)
    assert dim_between((1, 1), (3, 2)) == len(enumerate_paths(2, 1)) == 5


def test_min_max_paths():
    assert min_path(1, 1) == P("hv")
    assert min_path(0, 3) == P("vvv")
    assert min_path(3, 2) == P("hhhvv")
    assert max_path(1, 1) == P("vh")
    assert max_path(4, 0) == P("hhhh")
    assert max_path(2, 3) == P("vvvhh")


def test_compare_examples():
    assert compare_paths(P("hv"), P("d")) == -1
    assert compare_paths(P("d"), P("vh")) == -1
    assert compare_paths(P("vh"), P("hv")) == 1
    assert compare_paths(P("hdv"), P("hdv")) == 0
    with pytest.raises(DomainError):
        compare_paths(P("h"), P("v"))


@pytest.mark.parametrize("n,k", [(n, k) for n in range(5) for k in range(5)])
def test_compare_is_strict_total_order(n, k):
    paths = enumerate_paths(n, k)
    for x, y in itertools.product(paths, repeat=2):
        c = compare_paths(x, y)
        assert c == -compare_paths(y, x)
        assert (c == 0) == (x == y)
    ordered = sorted(paths, key=functools.cmp_to_key(compare_paths))
    for a, b, c in zip(ordered, ordered[1:], ordered[2:]):
        assert compare_paths(a, b) == -1 and compare_paths(b, c) == -1
        assert compare_paths(a, c) == -1
    assert ordered[0] == min_path(n, k)
    assert ordered[-1] == max_path(n, k)


def test_transitivity_exhaustive_small():
    paths = enumerate_paths(2, 2)
    for x, y, z in itertools.product(paths, repeat=3):
        if compare_paths(x, y) < 0 and compare_paths(y, z) < 0:
            assert compare_paths(x, z) < 0


def test_dfs_enumeration_counts():
    counts = dfs_path_counts(6, 6)
    for n in range(7):
        for k in range(7):
            paths = enumerate_paths(n, k)
            assert len(set(paths)) == len(paths) == counts[n][k] == delannoy(n, k)
            assert all(x.terminal == Vertex(n, k) for x in paths)
