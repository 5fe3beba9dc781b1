"""Graphs, cut-rank, r-splits, trivial cuts, and r-rank connectivity.

The rank of a cut (X, V-X) is the GF(2) rank of the adjacency submatrix
with rows X and columns V-X.  A cut is an r-split when its rank is at
most r, and trivial when its rank equals min(|X|, |V-X|), the largest
value the rank can take.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import limits
from .bitset import VertexSet, rank_of_rows


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; adj[u-1] is the neighbor mask of vertex u."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        if self.n > limits.MAX_UNIVERSE:
            raise ValueError(f"vertex count {self.n} exceeds rsplits.limits.MAX_UNIVERSE")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {u + 1} has bits outside the vertex range")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u + 1}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self.adj[u] >> v & 1) != (self.adj[v] >> u & 1):
                    raise ValueError(f"adjacency is not symmetric at ({u + 1}, {v + 1})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(adj))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            while row:
                low = row & -row
                out.append((u + 1, low.bit_length()))
                row ^= low
        return out

    def neighbors(self, v: int) -> VertexSet:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside range 1..{self.n}")
        return VertexSet(self.n, self.adj[v - 1])

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= self.adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1


def cut_rank(g: Graph, x: VertexSet) -> int:
    """Rank of the cut (x, complement) over GF(2)."""
    if x.n != g.n:
        raise ValueError(f"universe mismatch: set over {x.n}, graph over {g.n}")
    cols = ((1 << g.n) - 1) ^ x.mask
    side = x.mask
    rows = []
    while side:
        low = side & -side
        rows.append(g.adj[low.bit_length() - 1] & cols)
        side ^= low
    return rank_of_rows(rows)


def is_r_split(g: Graph, x: VertexSet, r: int) -> bool:
    """True when the cut at x has rank at most r."""
    if r < 0:
        raise ValueError("r must be >= 0")
    return cut_rank(g, x) <= r


def is_trivial_cut(g: Graph, x: VertexSet) -> bool:
    """True when the cut at x has full rank min(|x|, n - |x|)."""
    return cut_rank(g, x) == min(len(x), g.n - len(x))


def _sets_containing_vertex_one(g: Graph) -> Iterator[VertexSet]:
    # One representative per complement pair: vertex 1 always inside X.
    for rest in range(1 << max(g.n - 1, 0)):
        yield VertexSet(g.n, rest << 1 | 1)


def is_r_rank_connected(g: Graph, r: int) -> bool:
    """True when every cut of rank below r is trivial.

    Checked by exhaustion over all cuts; cuts come in complement pairs with
    equal rank and equal min-side size, so only the side containing vertex 1
    is enumerated.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    limits.check_cap(g.n, limits.exhaustive_cap(), "r-rank connectivity")
    if g.n == 0 or r == 0:
        return True
    for x in _sets_containing_vertex_one(g):
        rank = cut_rank(g, x)
        if rank < r and rank != min(len(x), g.n - len(x)):
            return False
    return True


GRAPH_FORMAT_HELP = (
    "lines starting with '#' are comments; first data line 'n m'; "
    "then m lines 'u v' with 1 <= u < v <= n"
)


def parse_graph(text: str) -> Graph:
    """Parse the textual graph format (see GRAPH_FORMAT_HELP)."""
    lines = [ln.strip() for ln in text.splitlines()]
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    if not data:
        raise ValueError("graph file has no data lines")
    header = data[0].split()
    if len(header) != 2:
        raise ValueError(f"bad graph header {data[0]!r}, expected 'n m'")
    n, m = int(header[0]), int(header[1])
    if len(data) - 1 != m:
        raise ValueError(f"header promises {m} edges, file has {len(data) - 1}")
    edges = []
    seen = set()
    for ln in data[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ValueError(f"self-loop {u} {v} rejected")
        if not (1 <= u < v <= n):
            raise ValueError(f"edge {u} {v} violates 1 <= u < v <= n")
        if (u, v) in seen:
            raise ValueError(f"duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
