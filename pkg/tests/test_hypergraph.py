from __future__ import annotations

import itertools
import random

import pytest

from conftest import SIX_MIDDLES
from rsplits.bitset import VertexSet
from rsplits.closure import close_full
from rsplits.hypergraph import (
    ClosedHypergraph,
    Hypergraph,
    NotClosedError,
    equals,
    format_closed,
    format_hypergraph,
    normalize,
    parse_closed,
    parse_hypergraph,
    trivial_closure_size,
)


def closed_from_tuples(n, r, middles):
    return ClosedHypergraph(n, r, frozenset(VertexSet.of(n, m) for m in middles))


def materialized_family(n, r, middles):
    """Explicit family: the given middles plus every trivially closed set."""
    edges = {VertexSet.of(n, m) for m in middles}
    for size in range(n + 1):
        if size <= r or size >= n - r:
            edges.update(VertexSet.of(n, c) for c in itertools.combinations(range(1, n + 1), size))
    return Hypergraph(n, frozenset(edges))


class TestContains:
    def test_large_sets_implicit(self, two_edge_closure):
        assert two_edge_closure.contains(VertexSet.of(8, [6, 7, 8]))

    def test_small_sets_implicit(self, two_edge_closure):
        assert two_edge_closure.contains(VertexSet.of(8, [1, 2]))

    def test_non_member_middle(self, two_edge_closure):
        assert not two_edge_closure.contains(VertexSet.of(8, [1, 2, 4]))

    def test_complement_symmetry(self, two_edge_closure):
        rng = random.Random(1)
        for _ in range(200):
            a = VertexSet(8, rng.getrandbits(8))
            assert two_edge_closure.contains(a) == two_edge_closure.contains(a.complement())


class TestCensus:
    @pytest.mark.parametrize("n", range(0, 13))
    @pytest.mark.parametrize("r", range(0, 4))
    def test_contains_matches_census(self, n, r):
        empty_closure = ClosedHypergraph(n, r, frozenset())
        count = sum(1 for mask in range(1 << n) if empty_closure.contains(VertexSet(n, mask)))
        assert count == trivial_closure_size(n, r)
        if n > 2 * r:
            import math

            assert count == 2 * sum(math.comb(n, i) for i in range(r + 1))


class TestNormalize:
    def test_six_middle_family(self):
        h = materialized_family(8, 2, SIX_MIDDLES)
        closed = normalize(h, 2)
        assert {m.members() for m in closed.middles} == {tuple(m) for m in SIX_MIDDLES}

    def test_missing_complement(self):
        h = materialized_family(8, 2, [(1, 2, 3)])
        with pytest.raises(NotClosedError, match="not complement closed"):
            normalize(h, 2)

    def test_trivial_part_alone(self):
        closed = normalize(materialized_family(8, 2, []), 2)
        assert closed.middles == frozenset()

    def test_missing_trivial_member(self):
        h = materialized_family(8, 2, [])
        pruned = Hypergraph(8, h.edges - {VertexSet.of(8, [1, 2])})
        with pytest.raises(NotClosedError, match="trivial part incomplete"):
            normalize(pruned, 2)

    def test_union_rule_violation(self):
        middles = [(1, 2, 3), (4, 5, 6, 7, 8), (2, 3, 4, 5), (1, 6, 7, 8)]
        with pytest.raises(NotClosedError, match="K2 violated"):
            normalize(materialized_family(8, 2, middles), 2)

    def test_idempotent_on_computed_closures(self):
        rng = random.Random(9)
        for _ in range(40):
            n = rng.randint(2, 8)
            r = rng.randint(0, 3)
            edges = frozenset(VertexSet(n, rng.getrandbits(n)) for _ in range(rng.randint(0, 3)))
            closed = close_full(Hypergraph(n, edges), r)
            assert equals(normalize(closed.materialize(), r), closed)

    def test_intersection_of_closed_families_is_closed(self):
        rng = random.Random(10)
        for _ in range(30):
            n = rng.randint(3, 8)
            r = rng.randint(0, 2)
            families = []
            for _ in range(2):
                edges = frozenset(VertexSet(n, rng.getrandbits(n)) for _ in range(rng.randint(0, 3)))
                families.append(close_full(Hypergraph(n, edges), r))
            meet = ClosedHypergraph(n, r, families[0].middles & families[1].middles)
            normalize(meet.materialize(), r)


class TestEquals:
    def test_insertion_order_irrelevant(self):
        a = closed_from_tuples(8, 2, SIX_MIDDLES)
        b = closed_from_tuples(8, 2, list(reversed(SIX_MIDDLES)))
        assert equals(a, b)

    def test_strictly_larger_family_differs(self, two_edge_closure):
        assert not equals(ClosedHypergraph(8, 2, frozenset()), two_edge_closure)

    def test_reflexive(self, two_edge_closure):
        assert equals(two_edge_closure, two_edge_closure)

    def test_mismatched_parameters_rejected(self):
        with pytest.raises(ValueError, match="cannot compare"):
            equals(ClosedHypergraph(8, 2, frozenset()), ClosedHypergraph(8, 1, frozenset()))


class TestConstructionInvariants:
    def test_middle_zone_enforced(self):
        with pytest.raises(ValueError, match="middle zone"):
            closed_from_tuples(8, 2, [(1, 2), (3, 4, 5, 6, 7, 8)])

    def test_complement_closure_enforced(self):
        with pytest.raises(NotClosedError):
            closed_from_tuples(8, 2, [(1, 2, 3)])

    def test_degenerate_universe_has_no_middles(self):
        assert ClosedHypergraph(4, 2, frozenset()).contains(VertexSet.of(4, [1, 2, 3]))


class TestFormats:
    def test_hypergraph_round_trip(self):
        h = Hypergraph.of_vertex_lists(6, [[1, 2], [3, 4, 5], []])
        assert parse_hypergraph(format_hypergraph(h)) == h

    def test_closed_round_trip(self, two_edge_closure):
        parsed = parse_closed(format_closed(two_edge_closure))
        assert equals(parsed, two_edge_closure)

    def test_closed_format_layout(self, two_edge_closure):
        lines = format_closed(two_edge_closure).splitlines()
        assert lines[0] == "8"
        assert lines[1] == "r 2"
        assert lines[-1] == "implicit cl-empty"
        # middles sorted by cardinality then vertex order
        assert lines[2:-1] == ["1,2,3", "6,7,8", "1,6,7,8", "2,3,4,5", "1,2,3,4,5", "4,5,6,7,8"]

    def test_comments_ignored(self):
        text = "# family\n4\nr 1\n# middles\n1,3\n2,4\nimplicit cl-empty\n"
        closed = parse_closed(text)
        assert {m.members() for m in closed.middles} == {(1, 3), (2, 4)}

    def test_empty_edge_line(self):
        h = parse_hypergraph("3\n-\n1,2\n")
        assert VertexSet.empty(3) in h.edges

    def test_bad_rank_header(self):
        with pytest.raises(ValueError, match="rank header"):
            parse_closed("4\n1,3\n")
