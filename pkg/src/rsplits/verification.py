"""Randomized verification suite: every structural law the library relies
on, each checked against independent brute-force routes where one exists.

All randomness flows from a single seeded generator, so a given (seed,
profile) pair produces a byte-identical report.  Engine entry points are
called through their modules, which lets tests inject broken routines and
confirm that the suite catches them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Optional

from . import bruteforce, closure as closure_mod, graph as graph_mod, ortho as ortho_mod
from . import splits as splits_mod
from .bitset import Gf2Matrix, VertexSet, gf2_rank
from .graph import Graph
from .hypergraph import (
    ClosedHypergraph,
    Hypergraph,
    equals,
    normalize,
    trivial_closure_size,
)
from .ortho import FamilyParams


@dataclass(frozen=True)
class PropertyResult:
    tag: str
    trials: int
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        detail = self.detail or f"trials={self.trials}"
        return f"{status} {self.tag} {detail}"

    def to_dict(self) -> dict:
        return {"tag": self.tag, "trials": self.trials, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class SuiteReport:
    seed: int
    profile: str
    results: tuple[PropertyResult, ...]

    @property
    def passed(self) -> bool:
        return all(res.passed for res in self.results)

    def format_lines(self) -> str:
        return "\n".join(res.line() for res in self.results) + "\n"

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "profile": self.profile,
            "passed": self.passed,
            "results": [res.to_dict() for res in self.results],
        }


# ---------------------------------------------------------------------------
# Random instance generators


def random_vertex_set(rng: random.Random, n: int) -> VertexSet:
    return VertexSet(n, rng.getrandbits(n) if n else 0)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_graph(rng, n, rng.uniform(0.3, 0.8))
        if g.is_connected():
            return g


def random_hypergraph(
    rng: random.Random,
    n: int,
    max_edges: int = 4,
    max_size: Optional[int] = None,
) -> Hypergraph:
    count = rng.randint(0, max_edges)
    edges = []
    for _ in range(count):
        if max_size is None:
            edges.append(random_vertex_set(rng, n))
        else:
            size = rng.randint(0, min(max_size, n))
            edges.append(VertexSet.of(n, rng.sample(range(1, n + 1), size)))
    return Hypergraph(n, frozenset(edges))


def random_closed_family(rng: random.Random, n: int, r: int) -> ClosedHypergraph:
    return closure_mod.close_full(random_hypergraph(rng, n, max_edges=3, max_size=max(2, n // 2)), r)


def _rank_connected_pool(rng: random.Random, r: int, count: int) -> list[Graph]:
    """Search random connected graphs for r-rank connected ones."""
    pool: list[Graph] = []
    attempts = 0
    while len(pool) < count and attempts < 4000:
        attempts += 1
        n = rng.randint(max(4, 2 * r), 8)
        g = random_connected_graph(rng, n)
        if graph_mod.is_r_rank_connected(g, r):
            pool.append(g)
    if not pool:
        # Cycles are r-rank connected for r <= 2; guarantee a non-empty pool.
        pool = [Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)]) for n in (5, 6, 7)]
    return pool


def _sorted_members(closed: ClosedHypergraph) -> list[VertexSet]:
    explicit = bruteforce.explicit_members(closed)
    return sorted(
        (VertexSet.of(closed.n, sorted(m)) for m in explicit),
        key=VertexSet.sort_key,
    )


# ---------------------------------------------------------------------------
# Property checks.  Each returns a PropertyResult; `trials` scales the work.


def check_gf2_rank_laws(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        n_rows = rng.randint(0, 7)
        n_cols = rng.randint(0, 7)
        rows = tuple(rng.getrandbits(n_cols) if n_cols else 0 for _ in range(n_rows))
        m = Gf2Matrix(n_rows, n_cols, rows)
        rank = gf2_rank(m)
        if rank != gf2_rank(m.transpose()):
            return PropertyResult("gf2-transpose", t + 1, False, f"rows={rows} cols={n_cols}")
        if n_rows >= 2:
            picks = rng.sample(range(n_rows), rng.randint(2, n_rows))
            extra = 0
            for i in picks:
                extra ^= rows[i]
            augmented = Gf2Matrix(n_rows + 1, n_cols, rows + (extra,))
            if gf2_rank(augmented) != rank:
                return PropertyResult("gf2-xor-append", t + 1, False, f"rows={rows} xor of {picks}")
        shuffled = list(rows)
        rng.shuffle(shuffled)
        if gf2_rank(Gf2Matrix(n_rows, n_cols, tuple(shuffled))) != rank:
            return PropertyResult("gf2-row-permutation", t + 1, False, f"rows={rows}")
    return PropertyResult("gf2-rank-laws", trials, True)


def check_set_cardinality_identity(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        n = rng.randint(0, 16)
        a = random_vertex_set(rng, n)
        b = random_vertex_set(rng, n)
        if len(a | b) + len(a & b) != len(a) + len(b):
            return PropertyResult("set-cardinality-identity", t + 1, False, f"n={n} a={a} b={b}")
    return PropertyResult("set-cardinality-identity", trials, True)


def check_cut_rank_vs_bruteforce(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        n = rng.randint(1, 9)
        g = random_graph(rng, n)
        x = random_vertex_set(rng, n)
        fast = graph_mod.cut_rank(g, x)
        slow = bruteforce.brute_cut_rank(g, frozenset(x.members()))
        if fast != slow:
            return PropertyResult(
                "cutrank-vs-bruteforce", t + 1, False, f"g={g.edges()} X={x}: {fast} vs {slow}"
            )
    return PropertyResult("cutrank-vs-bruteforce", trials, True)


def check_cut_rank_symmetry_and_bound(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        n = rng.randint(1, 10)
        g = random_graph(rng, n)
        x = random_vertex_set(rng, n)
        rank = graph_mod.cut_rank(g, x)
        if rank != graph_mod.cut_rank(g, x.complement()):
            return PropertyResult("cutrank-symmetry", t + 1, False, f"g={g.edges()} X={x}")
        if rank > min(len(x), n - len(x)):
            return PropertyResult("cutrank-bound", t + 1, False, f"g={g.edges()} X={x} rank={rank}")
    return PropertyResult("cutrank-symmetry-bound", trials, True)


def check_submodularity(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        n = rng.randint(1, 9)
        g = random_graph(rng, n)
        x = random_vertex_set(rng, n)
        y = random_vertex_set(rng, n)
        lhs = graph_mod.cut_rank(g, x | y) + graph_mod.cut_rank(g, x & y)
        rhs = graph_mod.cut_rank(g, x) + graph_mod.cut_rank(g, y)
        if lhs > rhs:
            return PropertyResult(
                "cutrank-submodular", t + 1, False, f"g={g.edges()} X={x} Y={y}: {lhs} > {rhs}"
            )
    return PropertyResult("cutrank-submodular", trials, True)


def _split_pairs(g: Graph, r: int) -> list[tuple[VertexSet, VertexSet]]:
    masks = []
    for mask in range(1 << g.n):
        x = VertexSet(g.n, mask)
        if graph_mod.cut_rank(g, x) <= r:
            masks.append(x)
    return [
        (x, y)
        for i, x in enumerate(masks)
        for y in masks[i:]
        if len(x & y) >= r
    ]


def check_split_union(rng: random.Random, trials: int) -> PropertyResult:
    done = 0
    for r in (1, 2):
        pool = _rank_connected_pool(rng, r, 6)
        candidates = [(g, _split_pairs(g, r)) for g in pool]
        candidates = [(g, pairs) for g, pairs in candidates if pairs]
        per_r = trials - done if r == 2 else trials // 2
        for _ in range(per_r):
            g, pairs = candidates[rng.randrange(len(candidates))]
            x, y = pairs[rng.randrange(len(pairs))]
            if not graph_mod.is_r_split(g, x | y, r):
                return PropertyResult(
                    "split-union", done + 1, False, f"r={r} g={g.edges()} X={x} Y={y}"
                )
            done += 1
    return PropertyResult("split-union", done, True)


def check_middle_rank_floor(rng: random.Random, trials: int) -> PropertyResult:
    done = 0
    for r in (1, 2):
        pool = _rank_connected_pool(rng, r, 6)
        per_r = trials - done if r == 2 else trials // 2
        for _ in range(per_r):
            g = pool[rng.randrange(len(pool))]
            x = random_vertex_set(rng, g.n)
            if r <= len(x) <= g.n - r and graph_mod.cut_rank(g, x) < r:
                return PropertyResult(
                    "middle-rank-floor", done + 1, False, f"r={r} g={g.edges()} X={x}"
                )
            done += 1
    return PropertyResult("middle-rank-floor", done, True)


def check_trivial_closure_census(rng: random.Random, trials: int) -> PropertyResult:
    combos = 0
    for n in range(0, 13):
        for r in range(0, 4):
            empty = ClosedHypergraph(n, r, frozenset())
            count = sum(
                1 for mask in range(1 << n) if empty.contains(VertexSet(n, mask))
            )
            if count != trivial_closure_size(n, r):
                return PropertyResult("trivial-closure-census", combos + 1, False, f"n={n} r={r}")
            if n > 2 * r:
                expected = 2 * sum(math.comb(n, i) for i in range(r + 1))
                if count != expected:
                    return PropertyResult(
                        "trivial-closure-census", combos + 1, False, f"n={n} r={r} formula"
                    )
            combos += 1
    return PropertyResult("trivial-closure-census", combos, True)


def check_closure_vs_bruteforce(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        r = rng.randint(1, 3)
        n = rng.randint(3, 9)
        h = random_hypergraph(rng, n, max_edges=4)
        full = closure_mod.close_full(h, r)
        if bruteforce.explicit_members(full) != bruteforce.brute_closure(h, r, use_rule_k2=True):
            return PropertyResult(
                "closure-vs-bruteforce", t + 1, False, f"n={n} r={r} edges={[str(e) for e in h]}"
            )
        degenerate = closure_mod.close_degenerate(h, r)
        if bruteforce.explicit_members(degenerate) != bruteforce.brute_closure(h, r, use_rule_k2=False):
            return PropertyResult(
                "degenerate-vs-bruteforce", t + 1, False, f"n={n} r={r} edges={[str(e) for e in h]}"
            )
    return PropertyResult("closure-vs-bruteforce", trials, True)


def check_closure_operator_laws(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        r = rng.randint(0, 3)
        n = rng.randint(2, 9)
        h = random_hypergraph(rng, n, max_edges=3)
        closed = closure_mod.close_full(h, r)
        if not all(closed.contains(edge) for edge in h.edges):
            return PropertyResult("closure-extensive", t + 1, False, f"n={n} r={r}")
        extra = random_vertex_set(rng, n)
        wider = Hypergraph(n, h.edges | {extra})
        wider_closed = closure_mod.close_full(wider, r)
        if not closed.middles <= wider_closed.middles:
            return PropertyResult("closure-monotone", t + 1, False, f"n={n} r={r} extra={extra}")
        again = closure_mod.close_full(closed.materialize(), r)
        if not equals(again, closed):
            return PropertyResult("closure-idempotent", t + 1, False, f"n={n} r={r}")
        degenerate = closure_mod.close_degenerate(h, r)
        if not degenerate.middles <= closed.middles:
            return PropertyResult("degenerate-below-full", t + 1, False, f"n={n} r={r}")
    return PropertyResult("closure-operator-laws", trials, True)


def check_normalize_idempotent(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        r = rng.randint(0, 3)
        n = rng.randint(2, 9)
        closed = random_closed_family(rng, n, r)
        renorm = normalize(closed.materialize(), r)
        if not equals(renorm, closed):
            return PropertyResult("normalize-idempotent", t + 1, False, f"n={n} r={r}")
        if not all(closed.contains(a) == closed.contains(a.complement()) for a in closed.middles):
            return PropertyResult("contains-complement", t + 1, False, f"n={n} r={r}")
    return PropertyResult("normalize-idempotent", trials, True)


def check_closure_system_intersection(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        r = rng.randint(0, 2)
        n = rng.randint(3, 8)
        h1 = random_closed_family(rng, n, r)
        h2 = random_closed_family(rng, n, r)
        meet = ClosedHypergraph(n, r, h1.middles & h2.middles)
        try:
            normalize(meet.materialize(), r)
        except ValueError as exc:
            return PropertyResult(
                "closure-system-intersection", t + 1, False, f"n={n} r={r}: {exc}"
            )
    return PropertyResult("closure-system-intersection", trials, True)


def check_derived_rules_hold(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        r = rng.randint(1, 3)
        n = rng.randint(3, 9)
        closed = random_closed_family(rng, n, r)
        violations = closure_mod.check_derived_rules(closed)
        if violations:
            return PropertyResult("derived-rules", t + 1, False, f"n={n} r={r}: {violations[0]}")
    return PropertyResult("derived-rules", trials, True)


def check_chain_union(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        r = rng.randint(1, 3)
        n = rng.randint(3, 9)
        closed = random_closed_family(rng, n, r)
        members = _sorted_members(closed)
        chain = [members[rng.randrange(len(members))]]
        for _ in range(rng.randint(0, 3)):
            linked = [m for m in members if len(m & chain[-1]) >= r]
            if not linked:
                break
            chain.append(linked[rng.randrange(len(linked))])
        union = chain[0]
        for a in chain[1:]:
            union = union | a
        if not closed.contains(union):
            return PropertyResult(
                "chain-union", t + 1, False, f"n={n} r={r} chain={[str(c) for c in chain]}"
            )
    return PropertyResult("chain-union", trials, True)


def check_half_side_intersection(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        r = rng.randint(1, 3)
        n = rng.randint(3, 9)
        closed = random_closed_family(rng, n, r)
        halves = [m for m in _sorted_members(closed) if 2 * len(m) <= n]
        a = halves[rng.randrange(len(halves))]
        b = halves[rng.randrange(len(halves))]
        if not closed.contains(a & b):
            return PropertyResult(
                "half-side-intersection", t + 1, False, f"n={n} r={r} A={a} B={b}"
            )
    return PropertyResult("half-side-intersection", trials, True)


def _random_pair(rng: random.Random, n: int) -> tuple[VertexSet, VertexSet]:
    """A pair biased toward subset/disjoint/complement shapes, so properties
    whose antecedent is orthogonality get exercised often."""
    a = random_vertex_set(rng, n)
    noise = rng.getrandbits(n) if n else 0
    style = rng.randrange(4)
    if style == 0:
        b = VertexSet(n, noise)
    elif style == 1:
        b = VertexSet(n, a.mask & noise)
    elif style == 2:
        b = VertexSet(n, noise & ~a.mask & ((1 << n) - 1))
    else:
        b = a.complement()
    return a, b


def check_ortho_formula_vs_definition(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        n = rng.randint(1, 8)
        r = rng.randint(0, 3)
        a, b = _random_pair(rng, n)
        via_formula = ortho_mod.is_orthogonal(a, b, r)
        via_definition = ortho_mod.is_orthogonal_oracle(a, b, r)
        if via_formula != via_definition:
            return PropertyResult(
                "ortho-formula-vs-definition",
                t + 1,
                False,
                f"n={n} r={r} A={a} B={b}: formula={via_formula}",
            )
    return PropertyResult("ortho-formula-vs-definition", trials, True)


def check_ortho_properties(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        n = rng.randint(1, 10)
        r = rng.randint(0, 3)
        a, b = _random_pair(rng, n)
        small = VertexSet.of(n, rng.sample(range(1, n + 1), min(rng.randint(0, r), n)))
        if not ortho_mod.is_orthogonal(small, b, r):
            return PropertyResult("ortho-prop-small", t + 1, False, f"n={n} r={r} A={small} B={b}")
        if not ortho_mod.is_orthogonal(a, a, r):
            return PropertyResult("ortho-prop-self", t + 1, False, f"n={n} r={r} A={a}")
        if not ortho_mod.is_orthogonal(a, a.complement(), r):
            return PropertyResult("ortho-prop-complement", t + 1, False, f"n={n} r={r} A={a}")
        ab = ortho_mod.is_orthogonal(a, b, r)
        if ab != ortho_mod.is_orthogonal(b, a, r):
            return PropertyResult("ortho-prop-symmetry", t + 1, False, f"n={n} r={r} A={a} B={b}")
        if ab and not ortho_mod.is_orthogonal(a, b.complement(), r):
            return PropertyResult("ortho-prop-flip-b", t + 1, False, f"n={n} r={r} A={a} B={b}")
        if ab:
            for a2 in (a, a.complement()):
                for b2 in (b, b.complement()):
                    if not ortho_mod.is_orthogonal(a2, b2, r):
                        return PropertyResult(
                            "ortho-prop-flip-both", t + 1, False, f"n={n} r={r} A={a2} B={b2}"
                        )
        if ab and not ortho_mod.is_orthogonal(a, b, r + 1):
            return PropertyResult("ortho-prop-monotone", t + 1, False, f"n={n} r={r} A={a} B={b}")
    return PropertyResult("ortho-properties", trials, True)


def check_noncrossing_r1(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        n = rng.choice((5, 6, 7))
        a = random_vertex_set(rng, n)
        b = random_vertex_set(rng, n)
        classic = (
            a.issubset(b)
            or b.issubset(a)
            or (a & b).mask == 0
            or (a | b).mask == (1 << n) - 1
        )
        if ortho_mod.is_orthogonal(a, b, 1) != classic:
            return PropertyResult("ortho-noncrossing-r1", t + 1, False, f"n={n} A={a} B={b}")
    return PropertyResult("ortho-noncrossing-r1", trials, True)


def check_singleton_closure(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        n = rng.randint(1, 9)
        r = rng.randint(0, 3)
        a = random_vertex_set(rng, n)
        closed = closure_mod.close_full(Hypergraph(n, frozenset({a})), r)
        if not closed.middles <= {a, a.complement()}:
            return PropertyResult(
                "singleton-closure", t + 1, False, f"n={n} r={r} A={a} middles={len(closed.middles)}"
            )
    return PropertyResult("singleton-closure", trials, True)


def check_pair_closure_union(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        n = rng.randint(2, 8)
        r = rng.randint(0, 3)
        a, b = _random_pair(rng, n)
        joint = closure_mod.close_full(Hypergraph(n, frozenset({a, b})), r)
        solo_union = (
            closure_mod.close_full(Hypergraph(n, frozenset({a})), r).middles
            | closure_mod.close_full(Hypergraph(n, frozenset({b})), r).middles
        )
        union_equality = joint.middles == solo_union
        if union_equality != ortho_mod.is_orthogonal(a, b, r):
            return PropertyResult(
                "pair-closure-union", t + 1, False, f"n={n} r={r} A={a} B={b}"
            )
    return PropertyResult("pair-closure-union", trials, True)


def check_crossfree_transfer(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        n = rng.randint(3, 6)
        r = rng.randint(1, 2)
        h = random_hypergraph(rng, n, max_edges=3)
        before = ortho_mod.is_cross_free(h, r)
        after = ortho_mod.is_cross_free(closure_mod.close_full(h, r).materialize(), r)
        if before != after:
            return PropertyResult(
                "crossfree-transfer", t + 1, False,
                f"n={n} r={r} edges={[str(e) for e in h]}: {before} vs {after}",
            )
    return PropertyResult("crossfree-transfer", trials, True)


def check_essential_roundtrip(rng: random.Random, trials: int) -> PropertyResult:
    done = 0
    while done < trials:
        n = rng.randint(4, 9)
        g = random_connected_graph(rng, n)
        for r in (1, 2):
            if not graph_mod.is_r_rank_connected(g, r):
                continue
            report = splits_mod.verify_representation(g, r)
            done += 1
            if not report.passed:
                return PropertyResult(
                    "essential-roundtrip", done, False, f"r={r} g={g.edges()}"
                )
            if done >= trials:
                break
    return PropertyResult("essential-roundtrip", done, True)


def check_family_laws(rng: random.Random, trials: int) -> PropertyResult:
    checked = 0
    for r in (1, 2, 3):
        for k in (2, 3, 4, 5):
            params = FamilyParams(r, k)
            family = ortho_mod.build_family(params)
            if len(family) != k**r:
                return PropertyResult("family-count", checked + 1, False, f"r={r} k={k}")
            edges = family.sorted_edges()
            if any(len(e) != r + 1 for e in edges):
                return PropertyResult("family-edge-size", checked + 1, False, f"r={r} k={k}")
            for _ in range(min(trials, 40)):
                a = edges[rng.randrange(len(edges))]
                b = edges[rng.randrange(len(edges))]
                if a != b and len(a & b) >= r:
                    return PropertyResult(
                        "family-intersection-sharpness", checked + 1, False, f"r={r} k={k} A={a} B={b}"
                    )
            if ortho_mod.find_crossing_pair(family, r) is not None:
                return PropertyResult("family-crossfree", checked + 1, False, f"r={r} k={k}")
            bounds = ortho_mod.crossfree_size_bounds(family, r)
            if not bounds.passed:
                return PropertyResult("crossfree-size-chain", checked + 1, False, f"r={r} k={k}")
            checked += 1
    return PropertyResult("family-laws", checked, True)


def check_lower_bound_desk(rng: random.Random, trials: int) -> PropertyResult:
    cases = ((1, 2), (1, 4), (2, 3))
    for r, k in cases:
        report = ortho_mod.verify_lower_bound(FamilyParams(r, k))
        if not report.passed:
            return PropertyResult("lowerbound-desk", 1, False, f"r={r} k={k}")
    return PropertyResult("lowerbound-desk", len(cases), True)


def check_split_enumeration_vs_bruteforce(rng: random.Random, trials: int) -> PropertyResult:
    for t in range(trials):
        n = rng.randint(1, 8)
        r = rng.randint(0, 3)
        g = random_graph(rng, n)
        fast = bruteforce.explicit_members(splits_mod.enumerate_r_splits(g, r))
        slow = bruteforce.brute_splits(g, r)
        if fast != slow:
            return PropertyResult(
                "splits-vs-bruteforce", t + 1, False, f"n={n} r={r} g={g.edges()}"
            )
    return PropertyResult("splits-vs-bruteforce", trials, True)


# ---------------------------------------------------------------------------
# Registry and runner

Check = Callable[[random.Random, int], PropertyResult]

# (tag, check, quick trials, full trials)
REGISTRY: tuple[tuple[str, Check, int, int], ...] = (
    ("gf2-rank-laws", check_gf2_rank_laws, 200, 1000),
    ("set-cardinality-identity", check_set_cardinality_identity, 300, 1000),
    ("cutrank-vs-bruteforce", check_cut_rank_vs_bruteforce, 80, 400),
    ("cutrank-symmetry-bound", check_cut_rank_symmetry_and_bound, 200, 1000),
    ("cutrank-submodular", check_submodularity, 200, 1000),
    ("split-union", check_split_union, 200, 1000),
    ("middle-rank-floor", check_middle_rank_floor, 200, 1000),
    ("trivial-closure-census", check_trivial_closure_census, 1, 1),
    ("closure-vs-bruteforce", check_closure_vs_bruteforce, 60, 500),
    ("closure-operator-laws", check_closure_operator_laws, 60, 300),
    ("normalize-idempotent", check_normalize_idempotent, 60, 300),
    ("closure-system-intersection", check_closure_system_intersection, 40, 200),
    ("derived-rules", check_derived_rules_hold, 100, 1000),
    ("chain-union", check_chain_union, 100, 1000),
    ("half-side-intersection", check_half_side_intersection, 100, 1000),
    ("ortho-formula-vs-definition", check_ortho_formula_vs_definition, 150, 1000),
    ("ortho-properties", check_ortho_properties, 300, 1000),
    ("ortho-noncrossing-r1", check_noncrossing_r1, 300, 1000),
    ("singleton-closure", check_singleton_closure, 150, 1000),
    ("pair-closure-union", check_pair_closure_union, 100, 1000),
    ("crossfree-transfer", check_crossfree_transfer, 60, 1000),
    ("essential-roundtrip", check_essential_roundtrip, 25, 120),
    ("family-laws", check_family_laws, 12, 40),
    ("lowerbound-desk", check_lower_bound_desk, 1, 1),
    ("splits-vs-bruteforce", check_split_enumeration_vs_bruteforce, 40, 200),
)

PROFILES = ("quick", "full")


def run_verification_suite(seed: int = 2024, profile: str = "quick") -> SuiteReport:
    """Run every registered property with reproducible randomness."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}, expected one of {PROFILES}")
    results = []
    for tag, check, quick_trials, full_trials in REGISTRY:
        trials = quick_trials if profile == "quick" else full_trials
        results.append(check(property_rng(seed, tag), trials))
    return SuiteReport(seed=seed, profile=profile, results=tuple(results))


def property_rng(seed: int, tag: str) -> random.Random:
    # str seeds go through sha512, stable across processes; tuple seeds do not.
    return random.Random(f"{seed}:{tag}")
