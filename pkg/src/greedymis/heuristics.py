"""Candidate scoring for the greedy growth step.

Two scoring rules are supported for a candidate vertex v joining an
independent set S:

* heuristic ``a``: the number of common non-neighbors of S ∪ {v}
  (the size of the surviving candidate pool), and
* heuristic ``b``: the stability of the graph induced on those
  non-neighbors, where the stability of a graph H on o vertices is
  sum(o / (deg_H(v) + 1) for v in V(H)).

Scores are exact rationals (`fractions.Fraction`), so ties are detected
exactly and comparisons never depend on floating-point rounding.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .graph import Graph, mask_of, non_neighbors

Score = Fraction


class Heuristic(Enum):
    A = "a"
    B = "b"


@lru_cache(maxsize=None)
def stability_weights(n: int) -> tuple[int, tuple[int, ...]]:
    """Common-denominator table for stability sums over graphs of order <= n.

    Returns (L, w) with L = lcm(1..n) and w[d] = L // (d + 1).  A stability
    value sum(o/(d_v+1)) then equals o * sum(w[d_v]) / L exactly, which lets
    scores be compared as plain integers over the shared denominator L.
    """
    den = lcm(*range(1, n + 1)) if n > 0 else 1
    return den, tuple(den // (d + 1) for d in range(n))


def scaled_stability(adj: tuple[int, ...], umask: int, weights: tuple[int, ...]) -> int:
    """Integer numerator of the stability of the subgraph induced on ``umask``.

    ``adj`` are parent-graph adjacency masks and ``weights`` the table from
    :func:`stability_weights` for the parent order; the implied denominator
    is the matching L.
    """
    o = umask.bit_count()
    total = 0
    mm = umask
    while mm:
        low = mm & -mm
        mm ^= low
        total += weights[(adj[low.bit_length() - 1] & umask).bit_count()]
    return o * total


def stability(h_graph: Graph) -> Score:
    """Exact stability of a graph: sum over vertices of o/(deg+1), o = order.

    Lies in [o, o*o]: o for complete graphs, o*o for edgeless ones.  The
    empty graph scores 0.
    """
    o = h_graph.n
    if o == 0:
        return Fraction(0)
    den, weights = stability_weights(o)
    num = sum(weights[h_graph.degree(v)] for v in range(o))
    return Fraction(o * num, den)


def score(g: Graph, s: tuple[int, ...], v: int, h: Heuristic) -> Score:
    """Score candidate ``v`` for joining independent set ``s`` in ``g``.

    With U' the common non-neighbors of s ∪ {v}: heuristic A scores |U'|,
    heuristic B scores the stability of the subgraph induced on U'.  Both
    score 0 when U' is empty.  ``v`` must itself be a non-neighbor of ``s``.
    """
    pool = non_neighbors(g, s)
    if v not in pool:
        raise ValueError(f"vertex {v} is not a non-neighbor of {tuple(s)}")
    u2 = mask_of(pool) & ~g.adjacency_mask(v) & ~(1 << v)
    if h is Heuristic.A:
        return Fraction(u2.bit_count())
    den, weights = stability_weights(g.n)
    adj = tuple(g.adjacency_mask(w) for w in range(g.n))
    return Fraction(scaled_stability(adj, u2, weights), den)
