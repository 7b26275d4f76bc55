"""Simple graphs, bipartite one-way digraphs and the lift between them.

Vertices are labeled ``1..n``. Vertex sets are carried as Python ``int``
bitmasks (bit ``v - 1`` set iff ``v`` is a member); Python integers are
unbounded, so the same representation serves every ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    WHEEL = "wheel"
    COMPLETE = "complete"


def _pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"vertex count must be nonnegative, got {self.n}")
        normalized = set()
        for i, j in self.edges:
            if i == j:
                raise DomainError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise DomainError(f"edge {{{i},{j}}} has an endpoint outside [1, {self.n}]")
            normalized.add(_pair(i, j))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        return cls(n, frozenset(_pair(i, j) for i, j in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for i, j in self.edges:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return out

    def closed_neighborhood_masks(self) -> list[int]:
        """Bitmask of N[v] for v = 1..n, in vertex order."""
        masks = [1 << (v - 1) for v in self.vertices]
        for i, j in self.edges:
            masks[i - 1] |= 1 << (j - 1)
            masks[j - 1] |= 1 << (i - 1)
        return masks

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={sorted(self.edges)})"


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def members(mask: int) -> list[int]:
    """Vertices (1-based) encoded in ``mask``, ascending."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


# --------------------------------------------------------------------------
# constructors


def build_family(family: Family | str, n: int) -> SimpleGraph:
    family = Family(family)
    if n < 1:
        raise DomainError(f"{family.value} needs n >= 1, got {n}")
    if family is Family.PATH:
        return SimpleGraph.from_edges(n, ((i, i + 1) for i in range(1, n)))
    if family is Family.CYCLE:
        edges = [(i, i + 1) for i in range(1, n)]
        if n >= 3:
            edges.append((n, 1))
        # n = 2 collapses the dicycle's parallel edges into K_2
        return SimpleGraph.from_edges(n, edges)
    if family is Family.COMPLETE:
        return SimpleGraph.from_edges(
            n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
        )
    if n < 4:
        raise DomainError(f"wheel needs n >= 4, got {n}")
    return join(build_family(Family.COMPLETE, 1), build_family(Family.CYCLE, n - 1))


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    off = g.n
    edges = set(g.edges) | {(i + off, j + off) for i, j in h.edges}
    return SimpleGraph(g.n + h.n, frozenset(edges))


def join(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    u = disjoint_union(g, h)
    cross = {(i, g.n + j) for i in g.vertices for j in h.vertices}
    return SimpleGraph(u.n, u.edges | cross)


def is_dominating(g: SimpleGraph, d: Iterable[int] | int) -> bool:
    """True iff every vertex outside ``d`` has a neighbor in ``d``.

    ``d`` is either an iterable of vertex labels or a bitmask. The empty set
    dominates only the empty graph.
    """
    dmask = d if isinstance(d, int) else mask_of(d)
    if dmask < 0 or dmask >> g.n:
        raise DomainError(f"vertex set {members(dmask) if dmask >= 0 else dmask} not inside [1, {g.n}]")
    for v, nb in zip(g.vertices, g.closed_neighborhood_masks()):
        if not nb & dmask:
            return False
    return True


# --------------------------------------------------------------------------
# bipartite one-way digraphs


@dataclass(frozen=True)
class BipartiteOneWayDigraph:
    """Arcs run from ``u1`` (left) to ``u2`` (right) only.

    Left and right labels live in separate namespaces: left vertex ``i`` and
    right vertex ``i`` (written ``i'``) are different vertices. Deleting
    vertices never renames the survivors.
    """

    u1: frozenset[int]
    u2: frozenset[int]
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "u1", frozenset(self.u1))
        object.__setattr__(self, "u2", frozenset(self.u2))
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        for i, j in self.arcs:
            if i not in self.u1 or j not in self.u2:
                raise DomainError(f"arc ({i},{j}') does not run from u1 to u2")

    def out_neighbors(self, i: int) -> frozenset[int]:
        return frozenset(j for a, j in self.arcs if a == i)

    def in_neighbors(self, j: int) -> frozenset[int]:
        return frozenset(a for a, b in self.arcs if b == j)

    def __repr__(self) -> str:
        arcs = ", ".join(f"({i},{j}')" for i, j in sorted(self.arcs))
        return f"BipartiteOneWayDigraph(u1={sorted(self.u1)}, u2={sorted(self.u2)}, arcs=[{arcs}])"


def lift(g: SimpleGraph) -> BipartiteOneWayDigraph:
    arcs = {(i, i) for i in g.vertices}
    for i, j in g.edges:
        arcs.add((i, j))
        arcs.add((j, i))
    verts = frozenset(g.vertices)
    return BipartiteOneWayDigraph(verts, verts, frozenset(arcs))


def _require_left(gamma: BipartiteOneWayDigraph, i: int) -> None:
    if i not in gamma.u1:
        raise DomainError(f"{i} is not a left vertex of {gamma!r}")


def digraph_delete(gamma: BipartiteOneWayDigraph, i: int) -> BipartiteOneWayDigraph:
    """Gamma - i: drop left vertex ``i`` and its arcs."""
    _require_left(gamma, i)
    arcs = frozenset(a for a in gamma.arcs if a[0] != i)
    return BipartiteOneWayDigraph(gamma.u1 - {i}, gamma.u2, arcs)


def digraph_extract(gamma: BipartiteOneWayDigraph, i: int) -> BipartiteOneWayDigraph:
    """Gamma - N+[i]: drop left vertex ``i`` and every right vertex it reaches."""
    _require_left(gamma, i)
    gone = gamma.out_neighbors(i)
    arcs = frozenset(a for a in gamma.arcs if a[0] != i and a[1] not in gone)
    return BipartiteOneWayDigraph(gamma.u1 - {i}, gamma.u2 - gone, arcs)


def path_shaped_digraph(left: int, right: int) -> BipartiteOneWayDigraph:
    """The lifted path on ``min(left, right)`` vertices plus one dangling arc.

    ``(m+1, m)`` gives I_{m+1,m} (extra left vertex m+1 pointing at m') and
    ``(m, m+1)`` gives J_{m,m+1} (left m pointing at an extra m+1').
    ``(m, m)`` is the plain lift of P_m.
    """
    if left < 0 or right < 0 or abs(left - right) > 1:
        raise DomainError(f"no path-shaped digraph with sides ({left}, {right})")
    m = min(left, right)
    base = lift(build_family(Family.PATH, m)) if m else BipartiteOneWayDigraph(frozenset(), frozenset(), frozenset())
    arcs = set(base.arcs)
    if left == m + 1 and m:
        arcs.add((m + 1, m))
    elif right == m + 1 and m:
        arcs.add((m, m + 1))
    return BipartiteOneWayDigraph(frozenset(range(1, left + 1)), frozenset(range(1, right + 1)), frozenset(arcs))


def read_edge_list(text: str) -> SimpleGraph:
    """Parse ``n`` on the first line, then one ``i j`` pair per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise DomainError("edge list is empty")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            a, b = ln.split()
            edges.append((int(a), int(b)))
    except ValueError as exc:
        raise DomainError(f"malformed edge list: {exc}") from None
    return SimpleGraph.from_edges(n, edges)


def write_edge_list(g: SimpleGraph) -> str:
    rows = [str(g.n)] + [f"{i} {j}" for i, j in sorted(g.edges)]
    return "\n".join(rows) + "\n"
