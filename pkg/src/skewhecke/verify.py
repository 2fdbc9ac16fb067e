"""Structural checks: module structure, branching via the threshold split, enumeration.

Every check returns a report object instead of raising, so many shapes can
be summarised in one run.  Reports carry a witness string on failure.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from math import comb, factorial, prod

from .hecke import Outcome, apply, apply_quotient, apply_word, operator_table, straighten_from_bottom, straighten_to_top
from .poset import build_poset
from .qsym import QSymF, char_tableaux
from .shapes import Cell, Composition, SkewShape, comp_of, composition, compositions, contains
from .tableaux import DescentKind, Tableau, descent_set, generate_nset, generate_set, generate_sit, s0, srow

UPWARD = (DescentKind.RDI, DescentKind.ASTAR)
QUOTIENT_KINDS = (DescentKind.DI, DescentKind.ABARSTAR)


@dataclass(frozen=True)
class SplitPair:
    low: Tableau
    high: Tableau


def split(t: Tableau, m: int) -> SplitPair | None:
    """Cut a straight tableau into the entries ``<= m`` and the rest, shifted down by ``m``.

    Returns ``None`` when the small entries do not occupy a composition diagram
    in the bottom-left corner.
    """
    shape = t.shape
    if shape.inner:
        raise ValueError("split expects a tableau of straight shape")
    if not 0 <= m <= t.size:
        raise ValueError(f"threshold {m} outside 0..{t.size}")
    beta: list[int] = []
    for row in t.rows:
        small = [v <= m for v in row]
        width = sum(small)
        if any(small[width:]) or not all(small[:width]):
            return None
        beta.append(width)
    while beta and beta[-1] == 0:
        beta.pop()
    if 0 in beta:
        return None
    beta_t = tuple(beta)
    low_shape = SkewShape(beta_t)
    high_shape = SkewShape(shape.outer, beta_t)
    low = Tableau.from_rows(low_shape, [row[:w] for row, w in zip(t.rows, beta_t)])
    high = Tableau.from_rows(
        high_shape,
        [tuple(v - m for v in row[high_shape.inner_part(r):]) for r, row in enumerate(t.rows, start=1)],
    )
    return SplitPair(low, high)


def join(pair: SplitPair) -> Tableau:
    """Inverse of :func:`split`: put the low tableau back under the shifted high one."""
    m = pair.low.size
    shape = SkewShape(pair.high.shape.outer)
    values: dict[Cell, int] = dict(zip(pair.low.shape.cells, pair.low.entries))
    values.update({c: v + m for c, v in zip(pair.high.shape.cells, pair.high.entries)})
    return Tableau(shape, tuple(values[c] for c in shape.cells))


def _action(kind: DescentKind, on_set: bool):
    if on_set and kind in QUOTIENT_KINDS:
        return apply_quotient
    return lambda k, i, t: apply(k, i, t, check=False)


@dataclass
class BlockInfo:
    beta: Composition
    block_size: int
    product_size: int
    matches_product: bool


@dataclass
class BranchReport:
    alpha: Composition
    m: int
    kind: str
    on_set: bool
    total: int
    blocks: list[BlockInfo] = field(default_factory=list)
    partition_ok: bool = True
    dimension_ok: bool = True
    blocks_ok: bool = True
    intertwine_ok: bool = True
    closed_ok: bool = True
    witnesses: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.partition_ok
            and self.dimension_ok
            and self.blocks_ok
            and self.intertwine_ok
            and self.closed_ok
        )

    def to_json(self) -> dict:
        data = asdict(self)
        data["alpha"] = list(self.alpha)
        data["ok"] = self.ok
        for b in data["blocks"]:
            b["beta"] = list(b["beta"])
        return data


def _branch(alpha: Composition, m: int, kind: DescentKind, on_set: bool) -> BranchReport:
    alpha = composition(alpha)
    kind = DescentKind(kind)
    n = sum(alpha)
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= {n}, got {m}")
    gen = generate_set if on_set else generate_sit
    basis = gen(SkewShape(alpha))
    member = set(basis)
    act = _action(kind, on_set)
    report = BranchReport(alpha, m, kind.value, on_set, len(basis))

    blocks: dict[Composition, set[tuple[Tableau, Tableau]]] = {}
    pairs: dict[Tableau, SplitPair] = {}
    for t in basis:
        pair = split(t, m)
        if pair is None or join(pair) != t:
            report.partition_ok = False
            report.witnesses.append(f"split fails on {t.label()}")
            continue
        pairs[t] = pair
        blocks.setdefault(pair.low.shape.outer, set()).add((pair.low, pair.high))

    expected_total = 0
    for beta in compositions(m):
        if not contains(beta, alpha):
            continue
        lows = gen(SkewShape(beta))
        highs = gen(SkewShape(alpha, beta))
        expected_total += len(lows) * len(highs)
        got = blocks.get(beta, set())
        product = {(a, b) for a in lows for b in highs}
        same = got == product
        report.blocks.append(BlockInfo(beta, len(got), len(product), same))
        if not same:
            report.blocks_ok = False
            report.witnesses.append(
                f"block beta={beta}: {len(got)} tableaux vs {len(lows)}*{len(highs)} pairs"
            )
    if expected_total != len(basis):
        report.dimension_ok = False
        report.witnesses.append(f"sum of block products {expected_total} != {len(basis)}")

    for t, pair in pairs.items():
        for i in range(1, n):
            if i == m:
                continue
            res = act(kind, i, t)
            if res.tag is Outcome.SWAPPED and res.tableau not in member:
                report.closed_ok = False
                report.witnesses.append(f"pi_{i} sends {t.label()} outside the basis")
                continue
            if i < m:
                side = act(kind, i, pair.low)
                want = None if side.is_zero else SplitPair(side.tableau, pair.high)
            else:
                side = act(kind, i - m, pair.high)
                want = None if side.is_zero else SplitPair(pair.low, side.tableau)
            got_pair = None if res.is_zero else split(res.tableau, m)
            if got_pair != want:
                report.intertwine_ok = False
                report.witnesses.append(f"pi_{i} on {t.label()} does not match the factor action")
    return report


def branching_check(alpha: Composition, m: int, kind: DescentKind) -> BranchReport:
    return _branch(alpha, m, kind, on_set=False)


def branching_check_set(alpha: Composition, m: int, kind: DescentKind) -> BranchReport:
    """Branching over extended tableaux, with quotient actions for ``dI`` and ``Abarstar``."""
    return _branch(alpha, m, kind, on_set=True)


@dataclass
class SeriesReport:
    ok: bool
    characteristic: QSymF
    matches_char: bool
    witness: str | None = None


def composition_series_check(
    shape: SkewShape, kind: DescentKind, restrict_to_set: bool = False
) -> SeriesReport:
    """Filter the module along a linear extension of the poset and read off one-dimensional quotients."""
    kind = DescentKind(kind)
    poset = build_poset(shape)
    order = sorted(range(len(poset.nodes)), key=lambda k: (poset.rank[k], k))
    if kind not in UPWARD:
        order.reverse()
    nodes = [poset.nodes[k] for k in order]
    if restrict_to_set:
        nodes = [t for t in nodes if t.is_set()]
    position = {t: k for k, t in enumerate(nodes)}
    act = _action(kind, restrict_to_set)
    n = shape.size
    char: dict[Composition, int] = {}
    witness = None
    for k, t in enumerate(nodes):
        moved = set()
        for i in range(1, n):
            res = act(kind, i, t)
            if res.tag is Outcome.FIXED:
                continue
            moved.add(i)
            if res.is_zero:
                continue
            later = position.get(res.tableau)
            if later is None or later <= k:
                witness = witness or f"pi_{i} sends {t.label()} backwards in the filtration"
        if moved != descent_set(t, kind):
            witness = witness or f"non-fixing generators of {t.label()} differ from its descents"
        alpha = comp_of(moved, n)
        char[alpha] = char.get(alpha, 0) + 1
    f = QSymF(n, char)
    matches = f == char_tableaux(shape, kind, restrict_to_set)
    return SeriesReport(witness is None and matches, f, matches, witness)


def designated_generator(shape: SkewShape, kind: DescentKind) -> Tableau:
    return s0(shape) if DescentKind(kind) in UPWARD else srow(shape)


def _reachable(kind: DescentKind, shape: SkewShape, start: int, restrict_to_set: bool) -> set[int]:
    basis, table = operator_table(kind, shape, restrict_to_set)
    seen = {start}
    todo = [start]
    while todo:
        k = todo.pop()
        for i in range(1, shape.size):
            nxt = table[k, i]
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


def cyclicity_check(shape: SkewShape, kind: DescentKind) -> bool:
    """Every tableau is reached from ``S0`` (rdI, Astar) or ``S^row`` (dI, Abarstar).

    Reachability is cross-validated by replaying the straightening words.
    """
    kind = DescentKind(kind)
    basis = generate_sit(shape)
    start = basis.index(designated_generator(shape, kind))
    if len(_reachable(kind, shape, start, False)) != len(basis):
        return False
    for t in basis:
        if kind in UPWARD:
            word = straighten_from_bottom(t)
            res = apply_word(kind, word, s0(shape))
        else:
            word = list(reversed(straighten_to_top(t)))
            res = apply_word(kind, word, srow(shape))
        if res.tableau != t:
            return False
    return True


def set_generators(shape: SkewShape, kind: DescentKind = DescentKind.RDI) -> list[Tableau]:
    """Extended tableaux from which every extended tableau can be reached."""
    kind = DescentKind(kind)
    basis = generate_set(shape)
    return [
        t
        for k, t in enumerate(basis)
        if len(_reachable(kind, shape, k, True)) == len(basis)
    ]


def set_cyclicity_check(shape: SkewShape, kind: DescentKind = DescentKind.RDI) -> bool:
    """True when a single extended tableau generates the extended module."""
    return bool(set_generators(shape, kind))


_PRIME = 2_147_483_647


def generated_dimension(
    shape: SkewShape,
    kind: DescentKind,
    restrict_to_set: bool = False,
    trials: int = 3,
    seed: int = 0,
) -> tuple[int, int]:
    """``(dim H.v, dim M)`` for random vectors ``v`` over GF(p), keeping the best trial.

    The module is cyclic exactly when some vector generates it, and then a
    random vector does with overwhelming probability.
    """
    basis, table = operator_table(kind, shape, restrict_to_set)
    size = len(basis)
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        v = [rng.randrange(_PRIME) for _ in range(size)]
        best = max(best, _orbit_span(v, table, size, shape.size))
        if best == size:
            break
    return best, size


def _orbit_span(v: list[int], table: dict, size: int, n: int) -> int:
    pivots: dict[int, list[int]] = {}

    def reduce(vec: list[int]) -> list[int] | None:
        vec = vec[:]
        for col, row in pivots.items():
            if vec[col]:
                f = vec[col]
                vec = [(a - f * b) % _PRIME for a, b in zip(vec, row)]
        lead = next((c for c, a in enumerate(vec) if a), None)
        if lead is None:
            return None
        inv = pow(vec[lead], _PRIME - 2, _PRIME)
        vec = [a * inv % _PRIME for a in vec]
        for col, row in pivots.items():
            if row[lead]:
                f = row[lead]
                pivots[col] = [(a - f * b) % _PRIME for a, b in zip(row, vec)]
        pivots[lead] = vec
        return vec

    todo = [v]
    while todo:
        vec = reduce(todo.pop())
        if vec is None:
            continue
        for i in range(1, n):
            image = [0] * size
            for k, a in enumerate(vec):
                if a:
                    target = table[k, i]
                    if target is not None:
                        image[target] = (image[target] + a) % _PRIME
            todo.append(image)
    return len(pivots)


@dataclass
class ClosureReport:
    set_closed_rdi: bool
    set_closed_astar: bool
    nset_closed_di: bool
    nset_closed_abarstar: bool

    @property
    def ok(self) -> bool:
        return all(asdict(self).values())


def _closed(subset: list[Tableau], kind: DescentKind) -> bool:
    members = set(subset)
    for t in subset:
        for i in range(1, t.size):
            res = apply(kind, i, t, check=False)
            if res.tag is Outcome.SWAPPED and res.tableau not in members:
                return False
    return True


def closure_check(shape: SkewShape) -> ClosureReport:
    sets = generate_set(shape)
    nsets = generate_nset(shape)
    return ClosureReport(
        _closed(sets, DescentKind.RDI),
        _closed(sets, DescentKind.ASTAR),
        _closed(nsets, DescentKind.DI),
        _closed(nsets, DescentKind.ABARSTAR),
    )


def straight_sit_formula(gamma: Composition) -> int:
    """``|SIT(gamma)|`` in closed form; the hook product runs over ``j = 0 .. len(gamma) - 1``."""
    m = sum(gamma)
    partial = [m - sum(gamma[:j]) for j in range(len(gamma))]
    return factorial(m) // (prod(partial) * prod(factorial(g - 1) for g in gamma))


def multinomial(parts: list[int]) -> int:
    out, total = 1, 0
    for p in parts:
        total += p
        out *= comb(total, p)
    return out


@dataclass
class EnumerationReport:
    shape: str
    count: int
    formula: int
    pure_multinomial: int | None
    notes: list[str] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return self.formula == self.count and self.pure_multinomial in (None, self.count)

    @property
    def flagged(self) -> bool:
        return bool(self.notes)


def sit_formula(alpha: Composition, beta: Composition) -> int:
    k = len(beta)
    gamma = tuple(alpha[k:])
    parts = [sum(gamma)] + [alpha[i] - beta[i] for i in range(k)]
    return straight_sit_formula(gamma) * multinomial(parts)


def sit_count(shape: SkewShape) -> EnumerationReport:
    """Count by generation (normative) against the closed formula.

    ``notes`` records every reading of the formula that would disagree with
    the count: a hook product that keeps its final factor ``0``, and a
    multinomial whose top is ``|alpha|`` instead of the number of skew cells.
    """
    alpha, beta = shape.outer, shape.inner
    count = len(generate_sit(shape))
    value = sit_formula(alpha, beta)
    pure = None
    if len(alpha) == len(beta):
        pure = multinomial([a - b for a, b in zip(alpha, beta)])
    notes = []
    if len(alpha) > len(beta):
        notes.append("hook product over j = 0..len(gamma) contains the factor 0")
    if beta:
        top_n = value * factorial(sum(alpha)) // factorial(shape.size)
        if top_n != count:
            notes.append(f"multinomial with top |alpha| = {sum(alpha)} gives {top_n}")
    if value != count:
        notes.append(f"formula value {value} differs from the count {count}")
    if pure is not None and pure != count:
        notes.append(f"multinomial {pure} differs from the count {count}")
    return EnumerationReport(str(shape), count, value, pure, notes)
