import math

import pytest
from hypothesis import given, settings, strategies as st

from dompoly.graph import (
    BipartiteOneWayDigraph,
    SimpleGraph,
    build_family,
    disjoint_union,
    lift,
    path_shaped_digraph,
)
from dompoly.oracle import (
    ResourceError,
    brute_force_digraph_poly,
    brute_force_poly,
    covering_histogram,
    kset_triangle,
)
from dompoly.polynomial import DomPolynomial

from conftest import naive_counts, naive_digraph_counts, rand_graph


def test_examples():
    assert brute_force_poly(build_family("complete", 3)).coeffs == (0, 3, 3, 1)
    assert brute_force_poly(build_family("path", 4)).coeffs == (0, 0, 4, 4, 1)
    assert brute_force_poly(build_family("path", 1)).coeffs == (0, 1)
    assert brute_force_poly(SimpleGraph(0)) == DomPolynomial.zero(0)


def test_matches_naive_enumeration(rng):
    for n in range(1, 10):
        for _ in range(6):
            g = rand_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            assert list(brute_force_poly(g).coeffs) == naive_counts(g)


def test_digraph_examples():
    assert brute_force_digraph_poly(lift(build_family("path", 3))) == brute_force_poly(build_family("path", 3))
    free = BipartiteOneWayDigraph({1, 2, 3, 4}, set(), set())
    assert brute_force_digraph_poly(free).coeffs == tuple(math.comb(4, k) for k in range(5))
    stuck = BipartiteOneWayDigraph(set(), {1}, set())
    assert brute_force_digraph_poly(stuck).coeffs == (0,)


def test_digraph_matches_naive(rng):
    for _ in range(30):
        a, b = rng.randint(0, 6), rng.randint(0, 6)
        arcs = {(i, j) for i in range(1, a + 1) for j in range(1, b + 1) if rng.random() < 0.4}
        gam = BipartiteOneWayDigraph(range(1, a + 1), range(1, b + 1), arcs)
        assert list(brute_force_digraph_poly(gam).coeffs) == naive_digraph_counts(gam.u1, gam.u2, gam.arcs)


def test_lift_preserves_polynomial(rng):
    for n in range(1, 13):
        g = rand_graph(rng, n)
        assert brute_force_digraph_poly(lift(g)) == brute_force_poly(g)


def test_union_is_product(rng):
    for _ in range(10):
        g, h = rand_graph(rng, rng.randint(1, 6)), rand_graph(rng, rng.randint(1, 6))
        assert brute_force_poly(disjoint_union(g, h)) == brute_force_poly(g) * brute_force_poly(h)


def test_family_boundaries():
    for n in range(3, 19):
        p, c = brute_force_poly(build_family("path", n)), brute_force_poly(build_family("cycle", n))
        assert p[n - 1] == n and c[n - 1] == n
        assert p.min_k() == c.min_k() == -(-n // 3)
        for q in (p, c):
            assert q[0] == 0 and q[n] == 1
            assert all(0 <= q[k] <= math.comb(n, k) for k in range(n + 1))


def test_triangles():
    assert kset_triangle("path", 3).rows == ((1,), (2, 1), (1, 3, 1))
    assert kset_triangle("cycle", 3).rows[2] == (3, 3, 1)
    assert kset_triangle("path", 1).rows == ((1,),)
    w = kset_triangle("wheel", 5)
    assert w.first_n == 4 and w.row(4) == (4, 6, 4, 1)


def test_cap():
    with pytest.raises(ResourceError):
        brute_force_poly(build_family("path", 25))
    with pytest.raises(ResourceError):
        brute_force_poly(build_family("path", 8), cap=7)
    assert brute_force_poly(build_family("path", 8), cap=8)[8] == 1


def test_chunking_is_deterministic(rng):
    g = rand_graph(rng, 14)
    covers = g.closed_neighborhood_masks()
    ref = covering_histogram(covers, g.full_mask, low_bits=14)
    for low in (1, 3, 7, 11):
        assert covering_histogram(covers, g.full_mask, low_bits=low) == ref
        assert covering_histogram(covers, g.full_mask, low_bits=low, workers=3) == ref


def test_wide_target_fallback():
    # more than 63 right vertices forces the Python-int path
    u2 = range(1, 71)
    arcs = {(1, j) for j in range(1, 41)} | {(2, j) for j in range(30, 71)} | {(3, 5)}
    gam = BipartiteOneWayDigraph({1, 2, 3}, u2, arcs)
    assert brute_force_digraph_poly(gam).coeffs == (0, 0, 1, 1)


@settings(max_examples=40)
@given(st.integers(1, 5), st.integers(0, 1))
def test_path_shaped(m, extra_left):
    gam = path_shaped_digraph(m + extra_left, m + 1 - extra_left)
    assert list(brute_force_digraph_poly(gam).coeffs) == naive_digraph_counts(gam.u1, gam.u2, gam.arcs)
