"""Brute-force reference implementations, kept deliberately naive.

Everything here works on explicit Python sets of frozensets (vertex
labels, not bit masks) and dense 0/1 row lists, sharing no code with the
packed-int engines it cross-checks.  Speed is a non-goal.
"""

from __future__ import annotations

import itertools

from . import limits
from .bitset import VertexSet
from .graph import Graph
from .hypergraph import Hypergraph


def brute_closure(h: Hypergraph, r: int, use_rule_k2: bool = True) -> set[frozenset[int]]:
    """Explicit closure over all 2^n subsets by literal rule application.

    Seeds the family with the input edges and every set of at most r
    vertices, then sweeps complements (K1) and, when enabled, pairwise
    unions with intersection at least r (K2) until a full round adds
    nothing.
    """
    limits.check_cap(h.n, limits.oracle_cap(), "brute-force closure")
    universe = frozenset(range(1, h.n + 1))
    family: set[frozenset[int]] = {frozenset(edge.members()) for edge in h.edges}
    for size in range(r + 1):
        for combo in itertools.combinations(sorted(universe), size):
            family.add(frozenset(combo))
    changed = True
    while changed:
        changed = False
        for a in list(family):
            comp = universe - a
            if comp not in family:
                family.add(comp)
                changed = True
        if use_rule_k2:
            snapshot = list(family)
            for i, a in enumerate(snapshot):
                for b in snapshot[i + 1:]:
                    if len(a & b) >= r:
                        union = a | b
                        if union not in family:
                            family.add(union)
                            changed = True
    return family


def brute_rank(rows: list[list[int]]) -> int:
    """Textbook GF(2) Gaussian elimination on a dense 0/1 row list."""
    if not rows:
        return 0
    work = [row[:] for row in rows]
    n_cols = len(work[0])
    rank = 0
    pivot_row = 0
    for col in range(n_cols):
        pivot = None
        for i in range(pivot_row, len(work)):
            if work[i][col] == 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
        for i in range(len(work)):
            if i != pivot_row and work[i][col] == 1:
                work[i] = [x ^ y for x, y in zip(work[i], work[pivot_row])]
        rank += 1
        pivot_row += 1
        if pivot_row == len(work):
            break
    return rank


def brute_cut_rank(g: Graph, x_vertices: frozenset[int]) -> int:
    """Cut rank via an explicitly extracted dense submatrix."""
    others = [v for v in range(1, g.n + 1) if v not in x_vertices]
    rows = []
    for u in sorted(x_vertices):
        rows.append([(g.adj[u - 1] >> (v - 1)) & 1 for v in others])
    return brute_rank(rows)


def brute_splits(g: Graph, r: int) -> set[frozenset[int]]:
    """All r-splits, found by ranking every one of the 2^n cuts."""
    limits.check_cap(g.n, limits.oracle_cap(), "brute-force split enumeration")
    out = set()
    vertices = list(range(1, g.n + 1))
    for size in range(g.n + 1):
        for combo in itertools.combinations(vertices, size):
            side = frozenset(combo)
            if brute_cut_rank(g, side) <= r:
                out.add(side)
    return out


def brute_orthogonal(a: VertexSet, b: VertexSet, r: int) -> bool:
    """Orthogonality via its definition, on the brute-force closures."""
    pair = Hypergraph(a.n, frozenset({a, b}))
    return brute_closure(pair, r, use_rule_k2=True) == brute_closure(pair, r, use_rule_k2=False)


def explicit_members(closed) -> set[frozenset[int]]:
    """Explicit member set of a canonical closed family, for comparisons."""
    members = {frozenset(a.members()) for a in closed.middles}
    vertices = list(range(1, closed.n + 1))
    for size in range(closed.n + 1):
        if size <= closed.r or size >= closed.n - closed.r:
            for combo in itertools.combinations(vertices, size):
                members.add(frozenset(combo))
    return members
