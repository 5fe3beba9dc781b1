"""The family of r-splits of a graph and its polynomial representation.

For an r-rank connected graph the r-splits form an r-closed family, and
the whole family is recoverable from at most C(n, r+1) of its members:
map each (r+1)-set of vertices to the inclusion-minimum member of size
at most n/2 containing it, when one exists, and close the image.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

from . import limits
from .bitset import VertexSet
from .closure import close_full
from .graph import Graph, cut_rank, is_r_rank_connected
from .hypergraph import ClosedHypergraph, Hypergraph, NotClosedError, equals


def enumerate_r_splits(g: Graph, r: int, threads: int = 1) -> ClosedHypergraph:
    """All r-splits of g as a canonical closed family.

    Sets of size <= r or >= n-r are r-splits of every graph and stay
    implicit; only middles are enumerated.  Complement pairs have equal
    rank, so only sides containing vertex 1 are ranked.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    limits.check_cap(g.n, limits.exhaustive_cap(), "split enumeration")
    n = g.n
    if n == 0:
        return ClosedHypergraph(0, r, frozenset())
    total = 1 << (n - 1)
    if threads > 1:
        chunks = _split_range(total, threads)
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(lambda c: _scan_middles(g, r, c[0], c[1]), chunks)
            masks = set().union(*parts)
    else:
        masks = _scan_middles(g, r, 0, total)
    middles = set()
    full = (1 << n) - 1
    for mask in masks:
        middles.add(VertexSet(n, mask))
        middles.add(VertexSet(n, mask ^ full))
    return ClosedHypergraph(n, r, frozenset(middles))


def _split_range(total: int, parts: int) -> list[tuple[int, int]]:
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step) if lo < total]


def _scan_middles(g: Graph, r: int, lo: int, hi: int) -> set[int]:
    n = g.n
    out = set()
    for rest in range(lo, hi):
        mask = rest << 1 | 1
        size = mask.bit_count()
        if r < size < n - r and cut_rank(g, VertexSet(n, mask)) <= r:
            out.add(mask)
    return out


def phi(h: ClosedHypergraph, x: VertexSet) -> Optional[VertexSet]:
    """Inclusion-minimum member of size <= n/2 containing x, or None.

    x must have exactly r+1 vertices.  Candidates are necessarily middles:
    anything implicit is either too small to contain x or too large to
    satisfy 2|A| <= n.  The minimum is realized as the intersection of all
    candidates, which must itself be a candidate when h is truly closed.
    """
    if x.n != h.n:
        raise ValueError(f"universe mismatch: {x.n} vs {h.n}")
    if len(x) != h.r + 1:
        raise ValueError(f"phi takes a set of exactly {h.r + 1} vertices, got {len(x)}")
    n = h.n
    meet_mask: Optional[int] = None
    for a in h.middles:
        if x.mask & ~a.mask == 0 and 2 * len(a) <= n:
            meet_mask = a.mask if meet_mask is None else meet_mask & a.mask
    if meet_mask is None:
        return None
    meet = VertexSet(n, meet_mask)
    if meet not in h.middles:
        raise NotClosedError(
            f"input not r-closed: intersection {meet} of the members covering {x} is not a member"
        )
    return meet


def essential_representation(h: ClosedHypergraph) -> Hypergraph:
    """The deduplicated image of phi over all (r+1)-subsets of {1..n}."""
    edges = set()
    for combo in itertools.combinations(range(1, h.n + 1), h.r + 1):
        a = phi(h, VertexSet.of(h.n, combo))
        if a is not None:
            edges.add(a)
    return Hypergraph(h.n, frozenset(edges))


@dataclass(frozen=True)
class RoundTripReport:
    """Outcome of reconstructing a graph's r-split family from its essential part."""

    n: int
    r: int
    middle_count: int
    essential_count: int
    essential_bound: int
    closure_matches: bool

    @property
    def passed(self) -> bool:
        return self.closure_matches and self.essential_count <= self.essential_bound

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "middle_count": self.middle_count,
            "essential_count": self.essential_count,
            "essential_bound": self.essential_bound,
            "closure_matches": self.closure_matches,
            "passed": self.passed,
        }


def verify_representation(g: Graph, r: int, threads: int = 1) -> RoundTripReport:
    """Check that the essential members regenerate the full r-split family.

    Requires g to be r-rank connected; without that hypothesis the split
    family need not be closed and the reconstruction is not defined.
    """
    if not is_r_rank_connected(g, r):
        raise ValueError(f"graph is not {r}-rank connected")
    family = enumerate_r_splits(g, r, threads=threads)
    essential = essential_representation(family)
    rebuilt = close_full(essential, r)
    return RoundTripReport(
        n=g.n,
        r=r,
        middle_count=len(family.middles),
        essential_count=len(essential),
        essential_bound=math.comb(g.n, r + 1),
        closure_matches=equals(rebuilt, family),
    )
