"""Standard immaculate and extended tableaux of skew shape, and semistandard fillings.

A :class:`Tableau` stores one entry per skew cell, aligned with
``shape.cells`` (bottom row first, left to right).  Inner cells are never
stored; they print as ``·``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from . import kernels
from .shapes import Cell, Composition, ShapeError, SkewShape, contains


class TableauError(ValueError):
    pass


class DescentKind(str, Enum):
    """The four descent conventions; each one defines its own 0-Hecke action."""

    DI = "dI"
    RDI = "rdI"
    ASTAR = "Astar"
    ABARSTAR = "Abarstar"

    @classmethod
    def parse(cls, text: str) -> DescentKind:
        key = text.strip().lower()
        for kind in cls:
            if kind.value.lower() == key:
                return kind
        raise ValueError(f"unknown descent kind {text!r}; expected one of di, rdi, astar, abarstar")


# Relation between the row of i+1 and the row of i that makes i a descent.
_DESCENT_TEST = {
    DescentKind.DI: lambda lo, hi: hi > lo,
    DescentKind.RDI: lambda lo, hi: hi <= lo,
    DescentKind.ASTAR: lambda lo, hi: hi < lo,
    DescentKind.ABARSTAR: lambda lo, hi: hi >= lo,
}


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.shape.cells):
            raise TableauError(
                f"{len(self.entries)} entries given for {len(self.shape.cells)} cells of {self.shape}"
            )

    @classmethod
    def from_rows(cls, shape: SkewShape, rows: Sequence[Sequence[int]]) -> Tableau:
        """Build from per-row skew entries, bottom row first.  Trailing empty rows may be omitted."""
        rows = [tuple(r) for r in rows]
        rows += [()] * (len(shape.outer) - len(rows))
        if len(rows) != len(shape.outer):
            raise TableauError(f"{len(rows)} rows given for shape {shape}")
        for r, ((start, stop), row) in enumerate(zip(shape.row_slices, rows), start=1):
            if stop - start != len(row):
                raise TableauError(f"row {r} of {shape} has {stop - start} cells, got {len(row)}")
        return cls(shape, tuple(v for row in rows for v in row))

    @property
    def rows(self) -> list[tuple[int, ...]]:
        return [self.entries[a:b] for a, b in self.shape.row_slices]

    @cached_property
    def _rows_by_value(self) -> dict[int, int]:
        return {v: cell.row for v, cell in zip(self.entries, self.shape.cells)}

    def row_of(self, value: int) -> int:
        return self._rows_by_value[value]

    def cell_of(self, value: int) -> Cell:
        return self.shape.cells[self.entries.index(value)]

    def __getitem__(self, cell: tuple[int, int]) -> int:
        return self.entries[self.shape.index[Cell(*cell)]]

    @property
    def size(self) -> int:
        return len(self.entries)

    def is_standard(self) -> bool:
        return sorted(self.entries) == list(range(1, self.size + 1))

    def _respects(self, preds: list[list[int]]) -> bool:
        e = self.entries
        return all(e[q] < e[p] for p, qs in enumerate(preds) for q in qs)

    def is_sit(self) -> bool:
        shape = self.shape
        return (
            self.is_standard()
            and self._respects(shape.row_constraints)
            and self._respects(shape.first_column_constraints)
        )

    def is_set(self) -> bool:
        return self.is_sit() and self._respects(self.shape.column_constraints)

    def swap(self, i: int) -> Tableau:
        """Exchange the entries ``i`` and ``i + 1``."""
        table = {i: i + 1, i + 1: i}
        return Tableau(self.shape, tuple(table.get(v, v) for v in self.entries))

    def reading_word(self) -> list[int]:
        return [v for row in reversed(self.rows) for v in reversed(row)]

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> Tableau:
        return cls.from_rows(SkewShape.from_json(data), data["rows"])

    def label(self) -> str:
        """Compact one-line form: rows bottom to top separated by ``/``."""
        return "/".join(",".join(map(str, r)) if r else "-" for r in self.rows)

    def __str__(self) -> str:
        width = max((len(str(v)) for v in self.entries), default=1)
        lines = []
        for r in range(len(self.shape.outer), 0, -1):
            start, stop = self.shape.row_slices[r - 1]
            holes = ["·".rjust(width)] * self.shape.inner_part(r)
            lines.append(" ".join(holes + [str(v).rjust(width) for v in self.entries[start:stop]]))
        return "\n".join(lines)


def reading_word(t: Tableau) -> list[int]:
    return t.reading_word()


def inversions(word: Iterable[int]) -> int:
    return kernels.inversions(list(word))


def inv(t: Tableau) -> int:
    """Number of inversions of the reading word of ``t``."""
    return kernels.inversions(t.reading_word())


def descent_set(t: Tableau, kind: DescentKind) -> frozenset[int]:
    test = _DESCENT_TEST[DescentKind(kind)]
    return frozenset(i for i in range(1, t.size) if test(t.row_of(i), t.row_of(i + 1)))


def _canonical(tableaux: Iterable[Tableau]) -> list[Tableau]:
    return sorted(tableaux, key=Tableau.reading_word)


def _merge(*groups: list[list[int]]) -> list[list[int]]:
    return [[q for part in parts for q in part] for parts in zip(*groups)]


def generate_sit(shape: SkewShape) -> list[Tableau]:
    preds = _merge(shape.row_constraints, shape.first_column_constraints)
    fills = kernels.standard_fillings(shape.size, preds)
    return _canonical(Tableau(shape, f) for f in fills)


def generate_set(shape: SkewShape) -> list[Tableau]:
    preds = _merge(
        shape.row_constraints, shape.first_column_constraints, shape.column_constraints
    )
    fills = kernels.standard_fillings(shape.size, preds)
    return _canonical(Tableau(shape, f) for f in fills)


def generate_nset(shape: SkewShape) -> list[Tableau]:
    """Standard immaculate tableaux with at least one column that fails to increase."""
    return [t for t in generate_sit(shape) if not t.is_set()]


class ColumnRule(str, Enum):
    FIRST_STRICT = "1st col <"
    FIRST_WEAK = "1st col <="
    ALL_STRICT = "cols <"
    ALL_WEAK = "cols <="


class RowRule(str, Enum):
    STRICT = "rows <"
    WEAK = "rows <="


class FillingFamily(NamedTuple):
    columns: ColumnRule
    rows: RowRule

    def __str__(self) -> str:
        return f"{self.columns.value}, {self.rows.value}"

    @classmethod
    def all(cls) -> list[FillingFamily]:
        return [cls(c, r) for c in ColumnRule for r in RowRule]

    @classmethod
    def parse(cls, text: str) -> FillingFamily:
        """Parse e.g. ``"1st col <, rows <="`` or ``"cols<,rows<="``."""
        squash = text.replace(" ", "")
        for family in cls.all():
            if str(family).replace(" ", "") == squash:
                return family
        raise ValueError(f"unknown filling family {text!r}")

    def constraints(self, shape: SkewShape) -> tuple[list[list[int]], list[list[int]]]:
        """Split the shape's constraints into ``(strict, weak)`` predecessor lists."""
        rows = shape.row_constraints
        if self.columns in (ColumnRule.FIRST_STRICT, ColumnRule.FIRST_WEAK):
            cols = shape.first_column_constraints
        else:
            cols = shape.column_constraints
        empty = [[] for _ in shape.cells]
        col_strict = self.columns in (ColumnRule.FIRST_STRICT, ColumnRule.ALL_STRICT)
        row_strict = self.rows is RowRule.STRICT
        strict = _merge(rows if row_strict else empty, cols if col_strict else empty)
        weak = _merge(empty if row_strict else rows, empty if col_strict else cols)
        return strict, weak


# Which filling family generates the characteristic of (kind, SIT or SET).
FAMILY_OF = {
    (DescentKind.DI, False): FillingFamily(ColumnRule.FIRST_STRICT, RowRule.WEAK),
    (DescentKind.RDI, False): FillingFamily(ColumnRule.FIRST_WEAK, RowRule.STRICT),
    (DescentKind.DI, True): FillingFamily(ColumnRule.ALL_STRICT, RowRule.WEAK),
    (DescentKind.RDI, True): FillingFamily(ColumnRule.ALL_WEAK, RowRule.STRICT),
    (DescentKind.ASTAR, False): FillingFamily(ColumnRule.FIRST_WEAK, RowRule.WEAK),
    (DescentKind.ABARSTAR, False): FillingFamily(ColumnRule.FIRST_STRICT, RowRule.STRICT),
    (DescentKind.ASTAR, True): FillingFamily(ColumnRule.ALL_WEAK, RowRule.WEAK),
    (DescentKind.ABARSTAR, True): FillingFamily(ColumnRule.ALL_STRICT, RowRule.STRICT),
}


def generate_fillings(shape: SkewShape, family: FillingFamily, max_entry: int) -> list[Tableau]:
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    strict, weak = family.constraints(shape)
    fills = kernels.semistandard_fillings(shape.size, strict, weak, max_entry)
    return [Tableau(shape, f) for f in fills]


def s0(shape: SkewShape) -> Tableau:
    values: dict[Cell, int] = {}
    for k, cell in enumerate(shape.leftmost_column_cells, start=1):
        values[cell] = k
    nxt = len(values) + 1
    for start, stop in reversed(shape.row_slices):
        for cell in shape.cells[start:stop]:
            if cell not in values:
                values[cell] = nxt
                nxt += 1
    return Tableau(shape, tuple(values[c] for c in shape.cells))


def srow(shape: SkewShape) -> Tableau:
    return Tableau(shape, tuple(range(1, shape.size + 1)))


def scol(shape: SkewShape) -> Tableau:
    order = sorted(shape.cells, key=lambda c: (c.col, c.row))
    values = {cell: k for k, cell in enumerate(order, start=1)}
    return Tableau(shape, tuple(values[c] for c in shape.cells))


def phi(t: Tableau, u: Tableau | None = None) -> Tableau:
    """Embed ``t`` of shape ``alpha/beta`` into a straight tableau of shape ``alpha``.

    Skew entries are shifted up by ``|beta|`` and the cells of ``beta`` are
    filled by ``u`` (row superstandard when omitted).
    """
    shape = t.shape
    inner = SkewShape(shape.inner)
    if u is None:
        u = srow(inner)
    if u.shape != inner:
        raise TableauError(f"filling of the inner shape must have shape {inner}, got {u.shape}")
    if not t.is_sit():
        raise TableauError("phi needs a standard immaculate tableau")
    if not u.is_sit():
        raise TableauError("the inner filling must be a standard immaculate tableau")
    m = inner.size
    straight = SkewShape(shape.outer)
    values = {cell: v for cell, v in zip(u.shape.cells, u.entries)}
    values.update({cell: v + m for cell, v in zip(shape.cells, t.entries)})
    return Tableau(straight, tuple(values[c] for c in straight.cells))


def inv_alpha_beta(alpha: Composition, beta: Composition) -> int:
    """Closed form for the inversions between skew entries and inner entries after ``phi``."""
    if not contains(beta, alpha):
        raise ShapeError(f"{beta} is not contained in {alpha}")
    total = 0
    below = 0
    for j, b in enumerate(beta):
        below += b
        total += (alpha[j] - b) * below
    return total + sum(alpha[len(beta):]) * below


def mixed_inversions(word: Sequence[int], m: int) -> int:
    """Inversions ``(p, q)`` of ``word`` whose larger value exceeds ``m`` and smaller is at most ``m``."""
    count = 0
    for p, a in enumerate(word):
        if a > m:
            count += sum(1 for b in word[p + 1:] if b <= m)
    return count
