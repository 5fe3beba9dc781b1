"""r-orthogonality of vertex sets and r-cross-free families.

Two sets are r-orthogonal when closing the pair under the union rule K2
adds nothing beyond complements and trivially small sets; a family all of
whose pairs are orthogonal is r-cross-free.  Such families close by
complementation alone, which bounds their size and yields an explicit
family needing about n^r members in any generating set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import limits
from .bitset import VertexSet
from .closure import close_degenerate, close_full
from .hypergraph import ClosedHypergraph, Hypergraph, equals, is_middle
from .splits import essential_representation


def is_orthogonal(a: VertexSet, b: VertexSet, r: int) -> bool:
    """Orthogonality by the closed-form criterion: two conjuncts, each a
    five-way alternative over intersection, containment, complement-union
    and difference cardinalities."""
    if a.n != b.n:
        raise ValueError(f"universe mismatch: {a.n} vs {b.n}")
    if r < 0:
        raise ValueError("r must be >= 0")
    inter = len(a & b)
    outside = a.n - len(a | b)
    a_minus_b = len(a - b)
    b_minus_a = len(b - a)
    conjunct_1 = (
        inter < r
        or a.issubset(b)
        or b.issubset(a)
        or outside < r
        or (inter == r and outside == r)
    )
    conjunct_2 = (
        a_minus_b < r
        or inter == 0
        or outside == 0
        or b_minus_a < r
        or (a_minus_b == r and b_minus_a == r)
    )
    return conjunct_1 and conjunct_2


def is_orthogonal_oracle(a: VertexSet, b: VertexSet, r: int) -> bool:
    """Orthogonality by its definition: the pair closure with the union
    rule equals the pair closure without it."""
    if a.n != b.n:
        raise ValueError(f"universe mismatch: {a.n} vs {b.n}")
    limits.check_cap(a.n, limits.exhaustive_cap(), "pair-closure orthogonality")
    pair = Hypergraph(a.n, frozenset({a, b}))
    return equals(close_full(pair, r), close_degenerate(pair, r))


def find_crossing_pair(h: Hypergraph, r: int) -> Optional[tuple[VertexSet, VertexSet]]:
    """First non-orthogonal pair in canonical order, or None."""
    edges = h.sorted_edges()
    for i, a in enumerate(edges):
        for b in edges[i:]:
            if not is_orthogonal(a, b, r):
                return (a, b)
    return None


def is_cross_free(h: Hypergraph, r: int) -> bool:
    """True when every pair of edges (a set with itself included) is r-orthogonal."""
    return find_crossing_pair(h, r) is None


def cross_free_closure(h: Hypergraph, r: int) -> ClosedHypergraph:
    """Closure of a cross-free family, built directly: the middles are the
    family's own middle edges and their complements, nothing else."""
    crossing = find_crossing_pair(h, r)
    if crossing is not None:
        raise ValueError(f"input is not {r}-cross-free: ({crossing[0]}, {crossing[1]}) cross")
    middles = set()
    for edge in h.edges:
        if is_middle(h.n, r, edge):
            middles.add(edge)
            middles.add(edge.complement())
    return ClosedHypergraph(h.n, r, frozenset(middles))


@dataclass(frozen=True)
class CrossFreeBoundsReport:
    """Size accounting for a cross-free family and its closure."""

    n: int
    r: int
    edge_count: int
    middle_edges: int            # |H \ trivial closure|
    closure_middles: int         # |cl H \ trivial closure|
    closure_total: int           # |cl H|, implicit part counted exactly
    closure_cap: int             # 2(r+1)n^r + 2|H|
    chain_holds: bool            # middle_edges <= closure_middles <= 2 * middle_edges
    cap_holds: bool              # closure_total <= closure_cap

    @property
    def passed(self) -> bool:
        return self.chain_holds and self.cap_holds

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "edge_count": self.edge_count,
            "middle_edges": self.middle_edges,
            "closure_middles": self.closure_middles,
            "closure_total": self.closure_total,
            "closure_cap": self.closure_cap,
            "chain_holds": self.chain_holds,
            "cap_holds": self.cap_holds,
            "passed": self.passed,
        }


def crossfree_size_bounds(h: Hypergraph, r: int) -> CrossFreeBoundsReport:
    """Check both size laws for a cross-free family with exact arithmetic."""
    closed = cross_free_closure(h, r)
    middle_edges = sum(1 for edge in h.edges if is_middle(h.n, r, edge))
    closure_middles = len(closed.middles)
    closure_total = closed.member_count()
    closure_cap = 2 * (r + 1) * h.n**r + 2 * len(h.edges)
    return CrossFreeBoundsReport(
        n=h.n,
        r=r,
        edge_count=len(h.edges),
        middle_edges=middle_edges,
        closure_middles=closure_middles,
        closure_total=closure_total,
        closure_cap=closure_cap,
        chain_holds=middle_edges <= closure_middles <= 2 * middle_edges,
        cap_holds=closure_total <= closure_cap,
    )


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of the colored lower-bound family over n = k(r+1) vertices.

    Vertices carry a value v in 0..k-1 and a color c in 1..r+1, laid out as
    id(v, c) = (c-1)*k + v + 1, so color c occupies the contiguous label
    block (c-1)*k+1 .. c*k.
    """

    r: int
    k: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if self.k < 2:
            raise ValueError("k must be >= 2")

    @property
    def n(self) -> int:
        return self.k * (self.r + 1)

    def vertex_id(self, value: int, color: int) -> int:
        if not 0 <= value < self.k:
            raise ValueError(f"value {value} outside 0..{self.k - 1}")
        if not 1 <= color <= self.r + 1:
            raise ValueError(f"color {color} outside 1..{self.r + 1}")
        return (color - 1) * self.k + value + 1


def build_family(p: FamilyParams) -> Hypergraph:
    """All sets with one vertex per color whose values sum to 0 mod k.

    The first r values are free and determine the last, so the family has
    exactly k^r edges, each of size r+1.
    """
    edges = []
    values = [0] * (p.r + 1)
    for index in range(p.k**p.r):
        rem = index
        for i in range(p.r):
            values[i] = rem % p.k
            rem //= p.k
        values[p.r] = -sum(values[: p.r]) % p.k
        edges.append(VertexSet.of(p.n, (p.vertex_id(v, c + 1) for c, v in enumerate(values))))
    return Hypergraph(p.n, frozenset(edges))


@dataclass(frozen=True)
class LowerBoundReport:
    """Desk-scale witness that generating families cannot be much smaller
    than the cross-free family they close to."""

    r: int
    k: int
    n: int
    family_size: int
    closure_middles: int
    essential_count: int
    closure_matches: bool
    inequality_holds: bool       # 2 * essential_count >= family_size

    @property
    def passed(self) -> bool:
        return self.closure_matches and self.inequality_holds

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "k": self.k,
            "n": self.n,
            "family_size": self.family_size,
            "closure_middles": self.closure_middles,
            "essential_count": self.essential_count,
            "closure_matches": self.closure_matches,
            "inequality_holds": self.inequality_holds,
            "passed": self.passed,
        }


def verify_lower_bound(p: FamilyParams) -> LowerBoundReport:
    """Build the colored family, close it, extract the essential members,
    and check that twice their number covers the family size."""
    limits.check_cap(p.n, limits.exhaustive_cap(), "lower-bound pipeline")
    family = build_family(p)
    closed = cross_free_closure(family, p.r)
    essential = essential_representation(closed)
    rebuilt = close_full(essential, p.r)
    return LowerBoundReport(
        r=p.r,
        k=p.k,
        n=p.n,
        family_size=len(family),
        closure_middles=len(closed.middles),
        essential_count=len(essential),
        closure_matches=equals(rebuilt, closed),
        inequality_holds=2 * len(essential) >= len(family),
    )
