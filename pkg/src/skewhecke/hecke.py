"""0-Hecke generators acting on skew standard immaculate tableaux.

Generator words are lists of indices written the way operators compose:
``[j1, j2, ..., jr]`` stands for ``pi_j1 pi_j2 ... pi_jr``, so ``jr`` is
applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Sequence

from .shapes import SkewShape
from .tableaux import _DESCENT_TEST as _DESCENT, DescentKind, Tableau, descent_set, generate_set, generate_sit, s0, srow

GeneratorWord = list[int]


class HeckeError(ValueError):
    pass


class Outcome(Enum):
    FIXED = "fixed"
    SWAPPED = "swapped"
    ZERO = "zero"


@dataclass(frozen=True)
class HeckeResult:
    tag: Outcome
    tableau: Tableau | None = None

    @property
    def is_zero(self) -> bool:
        return self.tag is Outcome.ZERO

    def __str__(self) -> str:
        if self.tableau is None:
            return "0"
        return f"{self.tag.value}: {self.tableau.label()}"


ZERO = HeckeResult(Outcome.ZERO)



def _act(kind: DescentKind, i: int, t: Tableau) -> HeckeResult:
    if not _DESCENT[kind](t.row_of(i), t.row_of(i + 1)):
        return HeckeResult(Outcome.FIXED, t)
    swapped = t.swap(i)
    if swapped.is_sit():
        return HeckeResult(Outcome.SWAPPED, swapped)
    return ZERO


def apply(kind: DescentKind, i: int, t: Tableau, *, check: bool = True) -> HeckeResult:
    """Apply the generator ``pi_i`` of the ``kind`` action to ``t``."""
    kind = DescentKind(kind)
    if not 1 <= i <= t.size - 1:
        raise HeckeError(f"generator index {i} out of range 1..{t.size - 1}")
    if check and not t.is_sit():
        raise HeckeError("the 0-Hecke actions are defined on standard immaculate tableaux")
    return _act(kind, i, t)


def apply_quotient(kind: DescentKind, i: int, t: Tableau) -> HeckeResult:
    """Action on the span of extended tableaux, swaps that leave it being sent to zero.

    For ``rdI`` and ``Astar`` the extended tableaux span a submodule, so this
    coincides with :func:`apply`; for ``dI`` and ``Abarstar`` it is the action
    on the quotient by the span of the non-extended tableaux.
    """
    res = apply(kind, i, t, check=False)
    if res.tag is Outcome.SWAPPED and not res.tableau.is_set():
        return ZERO
    return res


def apply_word(
    kind: DescentKind,
    word: Sequence[int],
    t: Tableau,
    *,
    action: Callable[[DescentKind, int, Tableau], HeckeResult] | None = None,
) -> HeckeResult:
    """Apply ``pi_word[0] ... pi_word[-1]`` to ``t`` (last index first).

    The tag of the result is ``FIXED`` when every generator fixed the
    tableau, ``ZERO`` as soon as one annihilates it, ``SWAPPED`` otherwise.
    """
    kind = DescentKind(kind)
    step = action or (lambda k, i, s: apply(k, i, s, check=False))
    if not t.is_sit():
        raise HeckeError("the 0-Hecke actions are defined on standard immaculate tableaux")
    current = t
    moved = False
    for i in reversed(word):
        if not 1 <= i <= t.size - 1:
            raise HeckeError(f"generator index {i} out of range 1..{t.size - 1}")
        res = step(kind, i, current)
        if res.is_zero:
            return ZERO
        moved = moved or res.tag is Outcome.SWAPPED
        current = res.tableau
    return HeckeResult(Outcome.SWAPPED if moved else Outcome.FIXED, current)


def straighten_from_bottom(t: Tableau) -> GeneratorWord:
    """Word ``w`` with ``pi_w(S0) = t`` for the ``rdI`` action, built column 1 first, then rows top down.

    Each step un-does one swap: the current entry ``y`` is exchanged with
    ``y - 1``, which sits strictly lower, until ``y`` equals the entry of the
    bottom tableau in that cell.
    """
    if not t.is_sit():
        raise HeckeError("straightening needs a standard immaculate tableau")
    shape = t.shape
    target = s0(shape)
    want = dict(zip(shape.cells, target.entries))
    word: GeneratorWord = []
    current = t

    def repair(cell) -> None:
        nonlocal current
        while (y := current[cell]) != want[cell]:
            # y is always larger than its target here; y - 1 lives strictly lower.
            if y < want[cell] or current.row_of(y - 1) >= cell.row:
                raise AssertionError(f"straightening invariant broken at {cell} in\n{current}")
            word.append(y - 1)
            current = current.swap(y - 1)

    for cell in shape.leftmost_column_cells:
        repair(cell)
    for start, stop in reversed(shape.row_slices):
        for cell in shape.cells[start:stop]:
            if cell.col != 1:
                repair(cell)
    return word


def straighten_to_top(t: Tableau) -> GeneratorWord:
    """Word ``w`` with ``pi_w(t) = S^row`` for the ``rdI`` action.

    Rows are handled top to bottom; inside a row the largest mismatched entry
    ``x`` is pushed up one value at a time (``x`` swaps with ``x + 1``, which sits lower).
    """
    if not t.is_sit():
        raise HeckeError("straightening needs a standard immaculate tableau")
    shape = t.shape
    target = srow(shape)
    applied: list[int] = []
    current = t
    for start, stop in reversed(shape.row_slices):
        row_cells = shape.cells[start:stop]
        while True:
            wrong = [c for c in row_cells if current[c] != target[c]]
            if not wrong:
                break
            cell = max(wrong, key=lambda c: current[c])
            x = current[cell]
            if x > target[cell] or current.row_of(x + 1) >= cell.row:
                raise AssertionError(f"straightening invariant broken at {cell} in\n{current}")
            applied.append(x)
            current = current.swap(x)
    return list(reversed(applied))


def _basis(shape: SkewShape, restrict_to_set: bool) -> list[Tableau]:
    return generate_set(shape) if restrict_to_set else generate_sit(shape)


def operator_table(
    kind: DescentKind, shape: SkewShape, restrict_to_set: bool = False
) -> tuple[list[Tableau], dict[tuple[int, int], int | None]]:
    """The action as a table ``(basis index, i) -> basis index`` with ``None`` for zero."""
    kind = DescentKind(kind)
    basis = _basis(shape, restrict_to_set)
    position = {t: k for k, t in enumerate(basis)}
    act = apply_quotient if restrict_to_set else (lambda k, i, s: apply(k, i, s, check=False))
    table: dict[tuple[int, int], int | None] = {}
    for k, t in enumerate(basis):
        for i in range(1, shape.size):
            res = act(kind, i, t)
            if res.is_zero:
                table[k, i] = None
            elif res.tableau not in position:
                raise HeckeError(f"pi_{i} sends {t.label()} outside the basis")
            else:
                table[k, i] = position[res.tableau]
    return basis, table


@dataclass
class RelationReport:
    kind: DescentKind
    shape: SkewShape
    ok: bool
    witness: str | None = None


def check_relations(
    kind: DescentKind, shape: SkewShape, restrict_to_set: bool = False
) -> RelationReport:
    """Check idempotence, the braid relation and far commutation on every basis tableau."""
    basis, table = operator_table(kind, shape, restrict_to_set)
    n = shape.size

    def run(word: Iterable[int], k: int | None) -> int | None:
        for i in reversed(list(word)):
            if k is None:
                return None
            k = table[k, i]
        return k

    def fail(msg: str) -> RelationReport:
        return RelationReport(DescentKind(kind), shape, False, msg)

    for k, t in enumerate(basis):
        for i in range(1, n):
            if run([i, i], k) != run([i], k):
                return fail(f"pi_{i}^2 != pi_{i} on {t.label()}")
            if i + 1 < n and run([i, i + 1, i], k) != run([i + 1, i, i + 1], k):
                return fail(f"braid relation fails for i={i} on {t.label()}")
            for j in range(i + 2, n):
                if run([i, j], k) != run([j, i], k):
                    return fail(f"pi_{i} pi_{j} != pi_{j} pi_{i} on {t.label()}")
    return RelationReport(DescentKind(kind), shape, True)


__all__ = [
    "GeneratorWord",
    "HeckeError",
    "HeckeResult",
    "Outcome",
    "RelationReport",
    "ZERO",
    "apply",
    "apply_quotient",
    "apply_word",
    "check_relations",
    "descent_set",
    "operator_table",
    "straighten_from_bottom",
    "straighten_to_top",
]
