"""Exact maximum-independent-set solvers.

`exact_mis` is a branch-and-bound control: branch on a maximum-degree
vertex (exclude it, or include it and delete its closed neighborhood),
prune on the trivial |remaining| + |current| bound.  Vertices with at
most one remaining neighbor are taken greedily, which is always safe for
unweighted independence.  `brute_force_mis` scans every subset and exists
to validate the control on small inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, to_vertex_set

BRUTE_FORCE_LIMIT = 24


@dataclass(frozen=True)
class OracleResult:
    alpha: int
    witness: VertexSet


def exact_mis(g: Graph) -> OracleResult:
    """Independence number of ``g`` with a maximum witness set."""
    n = g.n
    if n == 0:
        return OracleResult(0, ())
    adj = g._adj
    closed = [adj[v] | (1 << v) for v in range(n)]
    best_size = 0
    best_mask = 0

    def visit(avail: int, size: int, chosen: int) -> None:
        nonlocal best_size, best_mask
        while avail:
            # one scan: take any degree<=1 vertex, else remember the max-degree one
            take = 0
            branch_v = -1
            branch_deg = -1
            mm = avail
            while mm:
                low = mm & -mm
                mm ^= low
                v = low.bit_length() - 1
                d = (adj[v] & avail).bit_count()
                if d <= 1:
                    take = low
                    break
                if d > branch_deg:
                    branch_deg = d
                    branch_v = v
            if take:
                size += 1
                chosen |= take
                avail &= ~closed[take.bit_length() - 1]
                continue
            if size + avail.bit_count() <= best_size:
                return
            low = 1 << branch_v
            visit(avail & ~closed[branch_v], size + 1, chosen | low)
            avail ^= low
        if size > best_size:
            best_size = size
            best_mask = chosen

    visit(g.full_mask, 0, 0)
    return OracleResult(best_size, to_vertex_set(best_mask))


def brute_force_mis(g: Graph) -> OracleResult:
    """Exhaustive subset scan; refuses n > BRUTE_FORCE_LIMIT."""
    n = g.n
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_LIMIT}, got {n}")
    if n == 0:
        return OracleResult(0, ())
    adj = g._adj
    independent = bytearray(1 << n)
    independent[0] = 1
    best_size = 0
    best_mask = 0
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        if independent[rest] and not adj[low.bit_length() - 1] & rest:
            independent[mask] = 1
            size = mask.bit_count()
            if size > best_size:
                best_size = size
                best_mask = mask
    return OracleResult(best_size, to_vertex_set(best_mask))
