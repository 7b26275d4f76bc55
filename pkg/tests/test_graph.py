import pytest
from hypothesis import given, strategies as st

from dompoly.graph import (
    BipartiteOneWayDigraph,
    DomainError,
    SimpleGraph,
    build_family,
    digraph_delete,
    digraph_extract,
    disjoint_union,
    is_dominating,
    join,
    lift,
    mask_of,
    path_shaped_digraph,
    read_edge_list,
    write_edge_list,
)


def E(*pairs):
    return frozenset(pairs)


def test_families():
    assert build_family("path", 3).edges == E((1, 2), (2, 3))
    assert build_family("cycle", 3).edges == E((1, 2), (2, 3), (1, 3))
    assert build_family("wheel", 4) == build_family("complete", 4)
    assert build_family("cycle", 1) == SimpleGraph(1)
    assert build_family("cycle", 2) == build_family("complete", 2)
    assert len(build_family("wheel", 7).edges) == 12


@pytest.mark.parametrize("fam,n", [("wheel", 3), ("wheel", 1), ("path", 0), ("cycle", -2)])
def test_family_domain_errors(fam, n):
    with pytest.raises(DomainError):
        build_family(fam, n)


def test_graph_invariants():
    with pytest.raises(DomainError):
        SimpleGraph.from_edges(2, [(1, 1)])
    with pytest.raises(DomainError):
        SimpleGraph.from_edges(2, [(1, 3)])
    with pytest.raises(DomainError):
        SimpleGraph(-1)
    assert SimpleGraph.from_edges(2, [(1, 2), (2, 1)]).edges == E((1, 2))


def test_union_and_join():
    p1 = build_family("path", 1)
    assert disjoint_union(p1, p1) == SimpleGraph(2)
    p2 = build_family("path", 2)
    assert disjoint_union(p2, p2).edges == E((1, 2), (3, 4))
    u = disjoint_union(build_family("path", 3), build_family("cycle", 3))
    assert (u.n, len(u.edges)) == (6, 5)
    assert join(build_family("complete", 1), build_family("cycle", 3)) == build_family("complete", 4)
    fan = join(build_family("complete", 1), build_family("path", 3))
    assert (fan.n, len(fan.edges)) == (4, 5)
    g = build_family("cycle", 5)
    assert join(SimpleGraph(0), g) == g


def test_is_dominating():
    p4 = build_family("path", 4)
    assert is_dominating(p4, {1, 3})
    assert not is_dominating(p4, {3, 4})
    assert not is_dominating(build_family("path", 3), set())
    assert is_dominating(SimpleGraph(0), set())
    assert is_dominating(p4, mask_of({2, 4}))
    with pytest.raises(DomainError):
        is_dominating(p4, {5})


def test_lift():
    g1 = lift(build_family("path", 1))
    assert (g1.u1, g1.u2, g1.arcs) == ({1}, {1}, E((1, 1)))
    assert lift(build_family("path", 2)).arcs == E((1, 1), (2, 2), (1, 2), (2, 1))
    assert len(lift(build_family("path", 3)).arcs) == 7


def test_delete_and_extract():
    d = digraph_delete(lift(build_family("path", 2)), 2)
    assert (d.u1, d.u2, d.arcs) == ({1}, {1, 2}, E((1, 1), (1, 2)))
    assert d == path_shaped_digraph(1, 2)  # J_{1,2}
    assert digraph_delete(lift(build_family("path", 3)), 3) == path_shaped_digraph(2, 3)

    e = digraph_extract(lift(build_family("path", 3)), 3)
    assert (e.u1, e.u2, e.arcs) == ({1, 2}, {1}, E((1, 1), (2, 1)))
    e1 = digraph_extract(lift(build_family("path", 1)), 1)
    assert (e1.u1, e1.u2, e1.arcs) == (frozenset(), frozenset(), frozenset())
    assert digraph_delete(lift(build_family("path", 1)), 1).u2 == {1}

    with pytest.raises(DomainError):
        digraph_delete(lift(build_family("path", 2)), 3)
    with pytest.raises(DomainError):
        digraph_extract(lift(build_family("path", 2)), 7)


def test_extract_from_I_shape():
    # extracting n from I_{n,n-1} removes (n-1)' and leaves I_{n-1,n-2}
    for n in range(4, 9):
        e = digraph_extract(path_shaped_digraph(n, n - 1), n)
        assert e.u1 == set(range(1, n))
        assert e.u2 == set(range(1, n - 1))
        assert e == path_shaped_digraph(n - 1, n - 2)


def test_bad_digraph():
    with pytest.raises(DomainError):
        BipartiteOneWayDigraph({1}, {1}, {(2, 1)})


def test_edge_list_roundtrip():
    g = build_family("wheel", 6)
    assert read_edge_list(write_edge_list(g)) == g
    assert read_edge_list("3\n1 2\n# comment\n2 3\n") == build_family("path", 3)
    with pytest.raises(DomainError):
        read_edge_list("")
    with pytest.raises(DomainError):
        read_edge_list("3\n1 2 3\n")


graphs = st.integers(1, 9).flatmap(
    lambda n: st.sets(
        st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] != e[1])
    ).map(lambda es: SimpleGraph.from_edges(n, es))
)


@given(graphs)
def test_lift_arc_count(g):
    assert len(lift(g).arcs) == g.n + 2 * len(g.edges)
    assert is_dominating(g, g.full_mask)


@given(graphs, st.data())
def test_dominating_is_monotone(g, data):
    d = data.draw(st.integers(0, g.full_mask))
    extra = data.draw(st.integers(0, g.full_mask))
    if is_dominating(g, d):
        assert is_dominating(g, d | extra)


@given(graphs, st.data())
def test_delete_extract_shrink(g, data):
    gam = lift(g)
    i = data.draw(st.sampled_from(sorted(gam.u1)))
    d, e = digraph_delete(gam, i), digraph_extract(gam, i)
    assert len(d.u1) == len(e.u1) == len(gam.u1) - 1
    assert len(e.u2) < len(gam.u2)
