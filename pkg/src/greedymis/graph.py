"""Simple undirected graphs on vertices 0..n-1.

Graphs are immutable after construction and safe to share across workers.
Adjacency is stored as one bitmask per vertex, which gives O(1) membership
queries and lets the solvers run on whole neighborhoods with single integer
operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .rng import SplitMix64

VertexSet = tuple[int, ...]
"""Canonical vertex set: strictly increasing tuple of vertex ids."""


class GraphError(ValueError):
    """Invalid graph construction input (bad endpoint, self-loop, bad size)."""


def mask_of(vertices: Iterable[int]) -> int:
    """Pack vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_vertex_set(mask: int) -> VertexSet:
    return tuple(bits_of(mask))


class Graph:
    """Simple undirected graph with bitmask adjacency.

    ``edges`` may contain duplicates and either orientation; they are
    normalized to (u, v) with u < v and deduplicated.
    """

    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._edges = tuple(
            (u, v) for u in range(n) for v in bits_of(adj[u] >> (u + 1) << (u + 1))
        )

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, sorted."""
        return self._edges

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return to_vertex_set(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_members(g: Graph, members: Iterable[int]) -> VertexSet:
    s = tuple(sorted(set(members)))
    if s and not (0 <= s[0] and s[-1] < g.n):
        bad = s[0] if s[0] < 0 else s[-1]
        raise GraphError(f"vertex {bad} out of range for n={g.n}")
    return s


def non_neighbors(g: Graph, members: Iterable[int]) -> VertexSet:
    """Common non-neighborhood: vertices outside ``members`` adjacent to none of them.

    For an empty ``members`` this is all of V(g).
    """
    s = _check_members(g, members)
    blocked = 0
    for v in s:
        blocked |= (1 << v) | g.adjacency_mask(v)
    return to_vertex_set(g.full_mask & ~blocked)


def induced_subgraph(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph induced on ``members``, relabelled 0..len-1 in increasing id order."""
    s = _check_members(g, members)
    index = {v: i for i, v in enumerate(s)}
    smask = mask_of(s)
    edges = [
        (index[u], index[v])
        for u in s
        for v in bits_of(g.adjacency_mask(u) & smask)
        if u < v
    ]
    return Graph(len(s), edges)


def _unrank_pairs(n: int, ranks: list[int]) -> list[tuple[int, int]]:
    """Map sorted ranks in [0, C(n,2)) to pairs (u, v), u < v, in lexicographic order."""
    edges = []
    u, base, width = 0, 0, n - 1
    for r in ranks:
        while r >= base + width:
            base += width
            u += 1
            width = n - 1 - u
        edges.append((u, u + 1 + (r - base)))
    return edges


def random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform random graph with exactly ``m`` distinct edges.

    The edge set is an m-subset drawn uniformly from all C(n,2) vertex pairs
    (Floyd's sampling algorithm over pair ranks), driven by the package
    SplitMix64 stream, so a seed pins the graph exactly.
    """
    npairs = n * (n - 1) // 2
    if not 0 <= m <= npairs:
        raise GraphError(f"m={m} out of range for n={n} (max {npairs})")
    rng = SplitMix64(seed)
    chosen: set[int] = set()
    for j in range(npairs - m, npairs):
        t = rng.below(j + 1)
        chosen.add(j if t in chosen else t)
    return Graph(n, _unrank_pairs(n, sorted(chosen)))
