import math

import pytest
from hypothesis import given, settings, strategies as st

from dompoly.engine import SELECTORS, graph_poly, memo_size, recurrence_poly
from dompoly.families import complete_poly, path_poly
from dompoly.graph import (
    BipartiteOneWayDigraph,
    SimpleGraph,
    build_family,
    digraph_delete,
    digraph_extract,
    lift,
    path_shaped_digraph,
)
from dompoly.oracle import brute_force_digraph_poly, brute_force_poly
from dompoly.polynomial import DomPolynomial, poly_shift

from conftest import rand_graph


def test_base_shapes():
    assert recurrence_poly(path_shaped_digraph(1, 0)).gamma_coeffs == (1, 1)  # 1 + t
    assert recurrence_poly(path_shaped_digraph(0, 1)) == DomPolynomial.zero(0)
    assert recurrence_poly(path_shaped_digraph(2, 1)).render() == "1 + 2t"
    assert recurrence_poly(path_shaped_digraph(3, 2)).render() == "1 + 3t + 2t^2"


def test_graph_examples():
    assert graph_poly(build_family("path", 2)).render() == "1 + 2t"
    k4 = graph_poly(build_family("complete", 4))
    assert k4 == complete_poly(4)
    assert k4.gamma_coeffs == (1, 4, 6, 4, 0)
    assert graph_poly(SimpleGraph(0)) == DomPolynomial.zero(0)


def test_paths_match_recurrence():
    for n in range(1, 19):
        assert graph_poly(build_family("path", n)) == path_poly(n)


def test_paths_stay_cheap():
    # memoization keeps the long path linear in size
    assert memo_size(build_family("path", 200)) < 20 * 200
    assert graph_poly(build_family("path", 200)) == path_poly(200)


def test_random_graphs_match_oracle(rng):
    for n in range(1, 11):
        for _ in range(8):
            g = rand_graph(rng, n, rng.choice([0.25, 0.5, 0.75]))
            assert graph_poly(g) == brute_force_poly(g)


@pytest.mark.parametrize("select", sorted(SELECTORS))
def test_selector_independence(select, rng):
    for n in range(1, 11):
        g = rand_graph(rng, n)
        assert graph_poly(g, select) == graph_poly(g, "max_out")


def test_custom_selector():
    g = build_family("wheel", 9)
    assert graph_poly(g, lambda cands, outs: cands[len(cands) // 2]) == brute_force_poly(g)


def test_component_product():
    a = lift(build_family("cycle", 5))
    b = lift(build_family("path", 4))
    shifted = {(i + 10, j + 10) for i, j in b.arcs}
    both = BipartiteOneWayDigraph(a.u1 | {i + 10 for i in b.u1}, a.u2 | {j + 10 for j in b.u2}, a.arcs | shifted)
    assert recurrence_poly(both) == recurrence_poly(a) * recurrence_poly(b)


def test_single_step_identity(rng):
    # D(Gamma) = D(Gamma - i) + t D(Gamma - N+[i]), checked on the oracle
    for _ in range(15):
        gam = lift(rand_graph(rng, rng.randint(2, 8)))
        i = rng.choice(sorted(gam.u1))
        lhs = brute_force_digraph_poly(gam)
        a = brute_force_digraph_poly(digraph_delete(gam, i)).coeffs
        b = brute_force_digraph_poly(digraph_extract(gam, i)).coeffs
        rhs = [x + y for x, y in zip(a + (0,), poly_shift(b, 1))]
        assert list(lhs.coeffs) == rhs


def test_uncoverable_right_vertex():
    gam = BipartiteOneWayDigraph({1, 2}, {1, 2, 3}, {(1, 1), (2, 2)})
    assert recurrence_poly(gam) == DomPolynomial(2, (0, 0, 0))


def test_isolated_left_vertices():
    gam = BipartiteOneWayDigraph({1, 2, 3}, {1}, {(1, 1)})
    # vertex 1 is forced, 2 and 3 are free
    assert recurrence_poly(gam).coeffs == (0, 1, 2, 1)
    free = BipartiteOneWayDigraph({1, 2, 3}, set(), set())
    assert recurrence_poly(free).coeffs == tuple(math.comb(3, k) for k in range(4))


arcs = st.sets(st.tuples(st.integers(1, 6), st.integers(1, 6)), max_size=20)


@settings(max_examples=150)
@given(st.integers(0, 6), st.integers(0, 6), arcs)
def test_random_digraphs_match_oracle(a, b, arc_set):
    kept = {(i, j) for i, j in arc_set if i <= a and j <= b}
    gam = BipartiteOneWayDigraph(range(1, a + 1), range(1, b + 1), kept)
    assert recurrence_poly(gam) == brute_force_digraph_poly(gam)
