"""Vertex sets as packed bit vectors and GF(2) linear algebra.

Vertices are labeled 1..n externally; internally vertex i occupies bit
i-1 of a Python int.  The conversion happens only here, at construction
and formatting time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import limits


def _check_universe(n: int) -> None:
    if n < 0:
        raise ValueError(f"universe size must be >= 0, got {n}")
    if n > limits.MAX_UNIVERSE:
        raise ValueError(
            f"universe size {n} exceeds the configured budget "
            f"({limits.MAX_UNIVERSE}); raise rsplits.limits.MAX_UNIVERSE to allow it"
        )


@dataclass(frozen=True)
class VertexSet:
    """A subset of {1, ..., n} stored as an n-bit mask."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        _check_universe(self.n)
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} has bits outside a universe of size {self.n}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int] = ()) -> VertexSet:
        mask = 0
        for v in vertices:
            if not 1 <= v <= n:
                raise ValueError(f"vertex {v} outside universe 1..{n}")
            mask |= 1 << (v - 1)
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> VertexSet:
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << n) - 1)

    @classmethod
    def parse(cls, n: int, text: str) -> VertexSet:
        """Parse the textual form: comma-separated ascending integers, `-` for the empty set."""
        text = text.strip()
        if text == "-":
            return cls.empty(n)
        try:
            vertices = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"bad vertex set {text!r}") from None
        if vertices != sorted(set(vertices)):
            raise ValueError(f"vertex set {text!r} is not strictly ascending")
        return cls.of(n, vertices)

    def members(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def __str__(self) -> str:
        if not self.mask:
            return "-"
        return ",".join(str(v) for v in self.members())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, vertex: int) -> bool:
        return 1 <= vertex <= self.n and self.mask >> (vertex - 1) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def _check_same_universe(self, other: VertexSet) -> None:
        if self.n != other.n:
            raise ValueError(f"universe mismatch: {self.n} vs {other.n}")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check_same_universe(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check_same_universe(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check_same_universe(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def complement(self) -> VertexSet:
        return VertexSet(self.n, self.mask ^ ((1 << self.n) - 1))

    def issubset(self, other: VertexSet) -> bool:
        self._check_same_universe(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: VertexSet) -> bool:
        self._check_same_universe(other)
        return self.mask & other.mask == 0

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical order: by cardinality, then by ascending vertex list."""
        return (len(self), self.members())


@dataclass(frozen=True)
class Gf2Matrix:
    """A 0/1 matrix; each row is packed into an int, column j in bit j."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_rows < 0 or self.n_cols < 0:
            raise ValueError("matrix dimensions must be >= 0")
        if len(self.rows) != self.n_rows:
            raise ValueError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        for row in self.rows:
            if not 0 <= row < (1 << self.n_cols):
                raise ValueError(f"row {row:#x} wider than {self.n_cols} columns")

    @classmethod
    def from_lists(cls, entries: Iterable[Iterable[int]]) -> Gf2Matrix:
        rows = []
        width = 0
        for entry_row in entries:
            bits = list(entry_row)
            if rows and len(bits) != width:
                raise ValueError("ragged rows")
            width = len(bits)
            row = 0
            for j, bit in enumerate(bits):
                if bit not in (0, 1):
                    raise ValueError(f"entry {bit!r} is not a bit")
                row |= bit << j
            rows.append(row)
        return cls(len(rows), width, tuple(rows))

    def transpose(self) -> Gf2Matrix:
        cols = [0] * self.n_cols
        for i, row in enumerate(self.rows):
            while row:
                low = row & -row
                cols[low.bit_length() - 1] |= 1 << i
                row ^= low
        return Gf2Matrix(self.n_cols, self.n_rows, tuple(cols))


def rank_of_rows(rows: Iterable[int]) -> int:
    """GF(2) rank of a list of packed rows, by elimination on lowest set bits."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            low = cur & -cur
            basis = pivots.get(low)
            if basis is None:
                pivots[low] = cur
                rank += 1
                break
            cur ^= basis
    return rank


def gf2_rank(m: Gf2Matrix) -> int:
    """Row rank of m over GF(2)."""
    return rank_of_rows(m.rows)
