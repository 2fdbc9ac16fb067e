"""Compositions, skew shapes and the cell geometry of their diagrams.

Rows are numbered from the bottom (row 1) and columns from the left
(column 1).  Cells of a skew diagram are always listed row by row, bottom row
first, left to right inside a row; every other module relies on that order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, NamedTuple

Composition = tuple[int, ...]


class ShapeError(ValueError):
    """Raised for malformed compositions or a non-contained inner shape."""


class Cell(NamedTuple):
    row: int
    col: int


def composition(parts: Iterable[int]) -> Composition:
    """Validate ``parts`` and return it as a tuple."""
    alpha = tuple(int(p) for p in parts)
    if any(p < 1 for p in alpha):
        raise ShapeError(f"composition parts must be positive: {alpha}")
    return alpha


def set_of(alpha: Composition) -> frozenset[int]:
    partial = 0
    out = []
    for part in alpha[:-1]:
        partial += part
        out.append(partial)
    return frozenset(out)


def comp_of(subset: Iterable[int], n: int) -> Composition:
    points = sorted(set(subset))
    if any(s < 1 or s > n - 1 for s in points):
        raise ShapeError(f"subset {points} is not contained in [1, {n - 1}]")
    if n == 0:
        return ()
    edges = [0, *points, n]
    return tuple(b - a for a, b in zip(edges, edges[1:]))


def complement(alpha: Composition) -> Composition:
    n = sum(alpha)
    return comp_of(set(range(1, n)) - set_of(alpha), n)


def contains(beta: Composition, alpha: Composition) -> bool:
    """True when the diagram of ``beta`` fits in the bottom-left corner of ``alpha``."""
    if len(beta) > len(alpha):
        return False
    return all(b <= a for b, a in zip(beta, alpha))


def is_partition(alpha: Composition) -> bool:
    return all(a >= b for a, b in zip(alpha, alpha[1:]))


def conjugate(lam: Composition) -> Composition:
    if not is_partition(lam):
        raise ShapeError(f"{lam} is not a partition")
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` (the empty one when ``n == 0``), in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)


def partitions(n: int, largest: int | None = None) -> Iterator[Composition]:
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first, *rest)


def subcompositions(alpha: Composition) -> Iterator[Composition]:
    """Every ``beta`` with ``beta ⊆ alpha``, from the empty composition up to ``alpha`` itself."""
    for length in range(len(alpha) + 1):
        yield from product(*(range(1, a + 1) for a in alpha[:length]))


@dataclass(frozen=True)
class SkewShape:
    outer: Composition
    inner: Composition = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", composition(self.outer))
        object.__setattr__(self, "inner", composition(self.inner))
        if not contains(self.inner, self.outer):
            raise ShapeError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        """Number of cells of the skew diagram, ``|outer| - |inner|``."""
        return sum(self.outer) - sum(self.inner)

    def inner_part(self, row: int) -> int:
        return self.inner[row - 1] if row <= len(self.inner) else 0

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(
            Cell(r, c)
            for r, a in enumerate(self.outer, start=1)
            for c in range(self.inner_part(r) + 1, a + 1)
        )

    @cached_property
    def index(self) -> dict[Cell, int]:
        return {cell: k for k, cell in enumerate(self.cells)}

    @cached_property
    def leftmost_column_cells(self) -> tuple[Cell, ...]:
        return tuple(Cell(r, 1) for r in range(len(self.inner) + 1, len(self.outer) + 1))

    @cached_property
    def row_slices(self) -> tuple[tuple[int, int], ...]:
        """``(start, stop)`` positions in :attr:`cells` for every row of ``outer``."""
        out = []
        start = 0
        for r, a in enumerate(self.outer, start=1):
            stop = start + a - self.inner_part(r)
            out.append((start, stop))
            start = stop
        return tuple(out)

    @cached_property
    def row_constraints(self) -> list[list[int]]:
        """For each position, the position immediately to its left in the same row (if any)."""
        preds: list[list[int]] = [[] for _ in self.cells]
        for start, stop in self.row_slices:
            for p in range(start + 1, stop):
                preds[p].append(p - 1)
        return preds

    @cached_property
    def first_column_constraints(self) -> list[list[int]]:
        preds: list[list[int]] = [[] for _ in self.cells]
        chain = [self.index[c] for c in self.leftmost_column_cells]
        for below, above in zip(chain, chain[1:]):
            preds[above].append(below)
        return preds

    @cached_property
    def column_constraints(self) -> list[list[int]]:
        """For each position, the nearest skew cell below it in the same column (gaps included)."""
        preds: list[list[int]] = [[] for _ in self.cells]
        last_in_column: dict[int, int] = {}
        for p, cell in enumerate(self.cells):
            if cell.col in last_in_column:
                preds[p].append(last_in_column[cell.col])
            last_in_column[cell.col] = p
        return preds

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, data: dict) -> SkewShape:
        return cls(tuple(data["outer"]), tuple(data.get("inner", ())))

    def __str__(self) -> str:
        outer = ",".join(map(str, self.outer))
        if not self.inner:
            return f"({outer})"
        return f"({outer})/({','.join(map(str, self.inner))})"


def cells(shape: SkewShape) -> list[Cell]:
    return list(shape.cells)


def leftmost_column_cells(shape: SkewShape) -> list[Cell]:
    return list(shape.leftmost_column_cells)


def skew_shapes(max_n: int, min_n: int = 0) -> Iterator[SkewShape]:
    """Every skew shape ``alpha/beta`` with ``min_n <= |alpha| <= max_n``."""
    for n in range(min_n, max_n + 1):
        for alpha in compositions(n):
            for beta in subcompositions(alpha):
                yield SkewShape(alpha, beta)


def composition_to_json(alpha: Composition) -> str:
    return json.dumps(list(alpha))
