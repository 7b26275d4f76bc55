"""Brute-force dominating-set counts by enumerating every subset.

The core routine counts, for each size k, the subsets S of a ground set of
``m`` elements whose combined cover ``OR_{s in S} cover[s]`` contains a
target mask. Closed neighborhoods give dominating sets of a simple graph;
out-neighborhoods of left vertices give dominating sets of a bipartite
one-way digraph.

Enumeration is a plain binary counter over ``[0, 2^m)``, vectorized with
numpy: the low ``LOW_BITS`` elements are tabulated once, and each value of
the high bits is one chunk. Chunk histograms are merged by addition, so the
result does not depend on the chunking or on worker scheduling.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from dompoly.graph import (
    BipartiteOneWayDigraph,
    DomainError,
    Family,
    SimpleGraph,
    build_family,
)
from dompoly.polynomial import DomPolynomial, KSetTriangle

DEFAULT_CAP = 24
MAX_CAP = 30
LOW_BITS = 16


class ResourceError(RuntimeError):
    """The requested enumeration exceeds the configured vertex cap."""


def _check_cap(m: int, cap: int) -> None:
    if cap > MAX_CAP:
        raise DomainError(f"oracle cap {cap} exceeds hard limit {MAX_CAP}")
    if m > cap:
        raise ResourceError(f"brute force over {m} elements exceeds cap {cap}")


def _low_tables(covers: Sequence[int], dtype) -> tuple[np.ndarray, np.ndarray]:
    """Union-of-covers and popcount for every subset of ``covers``."""
    union = np.zeros(1, dtype=dtype)
    pop = np.zeros(1, dtype=np.int64)
    for c in covers:
        union = np.concatenate([union, union | np.array(c, dtype=dtype)])
        pop = np.concatenate([pop, pop + 1])
    return union, pop


def _chunk_histogram(high: int, high_covers: Sequence[int], low_union, low_pop, target, dtype, m):
    base = 0
    extra = 0
    for b, c in enumerate(high_covers):
        if high >> b & 1:
            base |= c
            extra += 1
    hit = np.asarray((low_union | np.array(base, dtype=dtype)) & target == target, dtype=bool)
    return np.bincount(low_pop[hit] + extra, minlength=m + 1)


def covering_histogram(
    covers: Sequence[int], target: int, *, workers: int = 1, low_bits: int = LOW_BITS
) -> list[int]:
    """``h[k]`` = number of k-subsets of ``covers`` whose union contains ``target``."""
    m = len(covers)
    width = max(target.bit_length(), max((c.bit_length() for c in covers), default=0))
    if width <= 63:
        dtype = np.int64
        tgt = np.array(target, dtype=dtype)
    else:
        # Python-int object arrays: slow but exact for any width
        dtype = object
        tgt = target
    low = min(m, low_bits)
    low_union, low_pop = _low_tables(covers[:low], dtype)
    high_covers = list(covers[low:])

    def run(h: int) -> np.ndarray:
        return _chunk_histogram(h, high_covers, low_union, low_pop, tgt, dtype, m)

    chunks = range(1 << len(high_covers))
    total = np.zeros(m + 1, dtype=np.int64)
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(run, chunks):
                total += part
    else:
        for h in chunks:
            total += run(h)
    return [int(x) for x in total]


def brute_force_poly(g: SimpleGraph, *, cap: int = DEFAULT_CAP, workers: int = 1) -> DomPolynomial:
    if g.n == 0:
        return DomPolynomial.zero(0)
    _check_cap(g.n, cap)
    hist = covering_histogram(g.closed_neighborhood_masks(), g.full_mask, workers=workers)
    return DomPolynomial(g.n, hist)


def brute_force_digraph_poly(
    gamma: BipartiteOneWayDigraph, *, cap: int = DEFAULT_CAP, workers: int = 1
) -> DomPolynomial:
    """Count D within u1 such that every right vertex has an in-neighbor in D.

    The context n of the result is |u1|.
    """
    left = sorted(gamma.u1)
    _check_cap(len(left), cap)
    right_index = {j: b for b, j in enumerate(sorted(gamma.u2))}
    covers = [0] * len(left)
    left_index = {i: a for a, i in enumerate(left)}
    for i, j in gamma.arcs:
        covers[left_index[i]] |= 1 << right_index[j]
    target = (1 << len(right_index)) - 1
    hist = covering_histogram(covers, target, workers=workers)
    return DomPolynomial(len(left), hist)


def kset_triangle(family: Family | str, max_n: int, *, cap: int = DEFAULT_CAP) -> KSetTriangle:
    """Brute-force k-set triangle; wheels start at n = 4."""
    family = Family(family)
    _check_cap(max_n, cap)
    start = 4 if family is Family.WHEEL else 1
    rows = []
    for n in range(start, max_n + 1):
        p = brute_force_poly(build_family(family, n), cap=cap)
        rows.append(p.coeffs[1:])
    return KSetTriangle(family.value, start, tuple(rows))
