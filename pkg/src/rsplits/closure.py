"""Closure of a family under the rules K0 (small sets), K1 (complements),
and K2 (unions of members meeting in >= r vertices).

Only middle hyperedges need tracking: a member of size <= r forces its
union partner to absorb it, and a union reaching size >= n-r lands in the
implicit trivial part.  The fixpoint therefore runs entirely on middles.
"""

from __future__ import annotations

from collections import deque

from .bitset import VertexSet
from .hypergraph import ClosedHypergraph, Hypergraph, is_middle


def _seed_middles(h: Hypergraph, r: int) -> set[VertexSet]:
    seeds = set()
    for edge in h.edges:
        if is_middle(h.n, r, edge):
            seeds.add(edge)
            seeds.add(edge.complement())
    return seeds


def close_full(h: Hypergraph, r: int) -> ClosedHypergraph:
    """Least r-closed family containing h, in canonical form.

    Worklist fixpoint: each newly accepted middle is paired against every
    current middle; unions that stay in the middle zone enter the family
    together with their complements.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    n = h.n
    middles = _seed_middles(h, r)
    queue = deque(middles)
    while queue:
        a = queue.popleft()
        for b in list(middles):
            if (a.mask & b.mask).bit_count() >= r:
                union = VertexSet(n, a.mask | b.mask)
                if is_middle(n, r, union) and union not in middles:
                    co_union = union.complement()
                    middles.add(union)
                    middles.add(co_union)
                    queue.append(union)
                    queue.append(co_union)
    return ClosedHypergraph(n, r, frozenset(middles))


def close_degenerate(h: Hypergraph, r: int) -> ClosedHypergraph:
    """Least family containing h that is closed under K0 and K1 only."""
    if r < 0:
        raise ValueError("r must be >= 0")
    return ClosedHypergraph(h.n, r, frozenset(_seed_middles(h, r)))


def check_derived_rules(h: ClosedHypergraph) -> list[str]:
    """Violations of the derived rules P1 and P2 over middle pairs.

    P0 (all sets of size >= n-r are members) holds by representation.  An
    empty list certifies that intersections with small joint complement
    (P1) and asymmetric differences with a large opposite side (P2) are
    all members.
    """
    n, r = h.n, h.r
    violations = []
    middle_list = h.sorted_middles()
    for i, a in enumerate(middle_list):
        for b in middle_list[i + 1:]:
            if n - len(a | b) >= r and not h.contains(a & b):
                violations.append(f"P1 violated by ({a}, {b}): {a & b} missing")
            if len(a - b) >= r and not h.contains(b - a):
                violations.append(f"P2 violated by ({a}, {b}): {b - a} missing")
            if len(b - a) >= r and not h.contains(a - b):
                violations.append(f"P2 violated by ({b}, {a}): {a - b} missing")
    return violations
