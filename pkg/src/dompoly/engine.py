"""Domination polynomials through the left-vertex recurrence on digraphs.

For a bipartite one-way digraph and any left vertex i, in D-convention

    D(Gamma) = D(Gamma - i)  +  t * D(Gamma - N+[i])

where both operands carry context |u1| - 1: the first counts dominating
sets avoiding i, the second those containing i (i covers N+(i), so its
right neighbors drop out). Base cases: no right vertices gives (1+t)^|u1|;
an uncoverable right vertex gives 0. Weak components multiply.

A residual digraph is a pair of bitmasks (left survivors, right survivors)
over the original instance, which doubles as the memo key.
"""

from __future__ import annotations

import math
from typing import Callable

from dompoly.graph import BipartiteOneWayDigraph, SimpleGraph, lift
from dompoly.polynomial import DomPolynomial

# (candidate left bits, their out-masks restricted to the live right side) -> chosen bit
Selector = Callable[[list[int], list[int]], int]


def select_max_out(cands: list[int], outs: list[int]) -> int:
    best = 0
    for idx in range(1, len(cands)):
        if outs[idx].bit_count() > outs[best].bit_count():
            best = idx
    return cands[best]


def select_first(cands: list[int], outs: list[int]) -> int:
    return cands[0]


def select_last(cands: list[int], outs: list[int]) -> int:
    return cands[-1]


def select_min_out(cands: list[int], outs: list[int]) -> int:
    best = 0
    for idx in range(1, len(cands)):
        if outs[idx].bit_count() < outs[best].bit_count():
            best = idx
    return cands[best]


SELECTORS: dict[str, Selector] = {
    "max_out": select_max_out,
    "first": select_first,
    "last": select_last,
    "min_out": select_min_out,
}


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class _Evaluator:
    def __init__(self, out_masks: list[int], select: Selector):
        self.out = out_masks
        self.select = select
        self.memo: dict[tuple[int, int], tuple[int, ...]] = {}

    def components(self, left: int, right: int) -> list[tuple[int, int]]:
        comps = []
        todo = left
        while todo:
            seed = todo & -todo
            cl, cr = seed, self.out[seed.bit_length() - 1] & right
            grew = True
            while grew:
                grew = False
                for b in _bits(todo & ~cl):
                    o = self.out[b] & right
                    if o & cr:
                        cl |= 1 << b
                        cr |= o
                        grew = True
            comps.append((cl, cr))
            todo &= ~cl
        return comps

    def poly(self, left: int, right: int) -> tuple[int, ...]:
        """D-convention coefficients, length popcount(left) + 1."""
        key = (left, right)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        m = left.bit_count()
        if not right:
            res = tuple(math.comb(m, k) for k in range(m + 1))
        elif not left:
            res = (0,)
        else:
            cover = 0
            for b in _bits(left):
                cover |= self.out[b]
            if cover & right != right:
                res = (0,) * (m + 1)
            else:
                res = self._split_or_branch(left, right, m)
        self.memo[key] = res
        return res

    def _split_or_branch(self, left: int, right: int, m: int) -> tuple[int, ...]:
        comps = self.components(left, right)
        if len(comps) > 1:
            acc: tuple[int, ...] = (1,)
            for cl, cr in comps:
                part = self.poly(cl, cr)
                prod = [0] * (len(acc) + len(part) - 1)
                for i, x in enumerate(acc):
                    if x:
                        for j, y in enumerate(part):
                            prod[i + j] += x * y
                acc = tuple(prod)
            return acc
        cands = _bits(left)
        b = self.select(cands, [self.out[c] & right for c in cands])
        rest = left & ~(1 << b)
        without = self.poly(rest, right)
        with_i = self.poly(rest, right & ~self.out[b])
        res = [0] * (m + 1)
        for k, c in enumerate(without):
            res[k] += c
        for k, c in enumerate(with_i):
            res[k + 1] += c
        return tuple(res)


def recurrence_poly(
    gamma: BipartiteOneWayDigraph, select: str | Selector = "max_out"
) -> DomPolynomial:
    """Domination polynomial of a bipartite one-way digraph, context |u1|.

    ``select`` picks the branching vertex; the result does not depend on it.
    Ties in the built-in selectors go to the smallest label.
    """
    if isinstance(select, str):
        select = SELECTORS[select]
    left_labels = sorted(gamma.u1)
    right_index = {j: b for b, j in enumerate(sorted(gamma.u2))}
    left_index = {i: b for b, i in enumerate(left_labels)}
    out = [0] * len(left_labels)
    for i, j in gamma.arcs:
        out[left_index[i]] |= 1 << right_index[j]
    ev = _Evaluator(out, select)
    n = len(left_labels)
    coeffs = ev.poly((1 << n) - 1, (1 << len(right_index)) - 1)
    return DomPolynomial(n, coeffs)


def graph_poly(g: SimpleGraph, select: str | Selector = "max_out") -> DomPolynomial:
    if g.n == 0:
        return DomPolynomial.zero(0)
    return recurrence_poly(lift(g), select)


def memo_size(g: SimpleGraph, select: str | Selector = "max_out") -> int:
    """Number of distinct residual digraphs visited while computing ``g``."""
    if isinstance(select, str):
        select = SELECTORS[select]
    gamma = lift(g)
    out = [0] * g.n
    for i, j in gamma.arcs:
        out[i - 1] |= 1 << (j - 1)
    ev = _Evaluator(out, select)
    ev.poly(g.full_mask, g.full_mask)
    return len(ev.memo)
