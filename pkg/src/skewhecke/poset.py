"""The skew immaculate Hecke poset and its extended-tableau subposet."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .hecke import Outcome, apply
from .shapes import Composition, ShapeError, SkewShape, contains
from .tableaux import DescentKind, Tableau, generate_sit, inv, s0

Cover = tuple[int, int, int]


@dataclass(frozen=True)
class HeckePoset:
    """Cover digraph on tableaux.  ``covers`` holds ``(lower, upper, i)`` node indices."""

    shape: SkewShape
    nodes: tuple[Tableau, ...]
    covers: tuple[Cover, ...]
    rank: tuple[int, ...]
    _ids: dict[Tableau, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_ids", {t: k for k, t in enumerate(self.nodes)})

    def __len__(self) -> int:
        return len(self.nodes)

    def id_of(self, t: Tableau) -> int:
        return self._ids[t]

    def rank_of(self, t: Tableau) -> int:
        return self.rank[self._ids[t]]

    def up(self, k: int) -> list[int]:
        return [b for a, b, _ in self.covers if a == k]

    def down(self, k: int) -> list[int]:
        return [a for a, b, _ in self.covers if b == k]

    def edge_set(self) -> set[tuple[Tableau, Tableau, int]]:
        return {(self.nodes[a], self.nodes[b], i) for a, b, i in self.covers}

    def leq(self, s: Tableau, t: Tableau) -> bool:
        """``s <= t`` in the poset (reachability along covers)."""
        start, goal = self._ids[s], self._ids[t]
        succ = _successors(len(self.nodes), self.covers)
        seen = {start}
        todo = [start]
        while todo:
            k = todo.pop()
            if k == goal:
                return True
            for nxt in succ[k]:
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        return False

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "nodes": [
                {
                    "id": node_id(t),
                    "rows": [list(r) for r in t.rows],
                    "rank": r,
                    "set": t.is_set(),
                }
                for t, r in zip(self.nodes, self.rank)
            ],
            "covers": [
                {"from": node_id(self.nodes[a]), "to": node_id(self.nodes[b]), "i": i}
                for a, b, i in self.covers
            ],
        }


def _successors(n: int, covers: Iterable[Cover]) -> list[list[int]]:
    succ: list[list[int]] = [[] for _ in range(n)]
    for a, b, _ in covers:
        succ[a].append(b)
    return succ


def cover_digraph(shape: SkewShape, kind: DescentKind) -> set[tuple[Tableau, Tableau, int]]:
    """Every non-trivial transition ``T -> pi_i(T)`` of the given action, as ``(T, pi_i(T), i)``.

    Built from every tableau rather than by search from a single root, so a
    disconnected poset would show up.
    """
    kind = DescentKind(kind)
    edges = set()
    for t in generate_sit(shape):
        for i in range(1, shape.size):
            res = apply(kind, i, t, check=False)
            if res.tag is Outcome.SWAPPED:
                edges.add((t, res.tableau, i))
    return edges


def build_poset(shape: SkewShape) -> HeckePoset:
    nodes = tuple(generate_sit(shape))
    ids = {t: k for k, t in enumerate(nodes)}
    covers = sorted(
        (ids[a], ids[b], i) for a, b, i in cover_digraph(shape, DescentKind.RDI)
    )
    base = inv(s0(shape))
    rank = tuple(inv(t) - base for t in nodes)
    return HeckePoset(shape, nodes, tuple(covers), rank)


def reversed_edges(edges: Iterable[tuple[Tableau, Tableau, int]]) -> set[tuple[Tableau, Tableau, int]]:
    return {(b, a, i) for a, b, i in edges}


def minimal_elements(p: HeckePoset) -> list[Tableau]:
    has_down = {b for _, b, _ in p.covers}
    return [t for k, t in enumerate(p.nodes) if k not in has_down]


def maximal_elements(p: HeckePoset) -> list[Tableau]:
    has_up = {a for a, _, _ in p.covers}
    return [t for k, t in enumerate(p.nodes) if k not in has_up]


def is_acyclic(p: HeckePoset) -> bool:
    indeg = [0] * len(p.nodes)
    for _, b, _ in p.covers:
        indeg[b] += 1
    succ = _successors(len(p.nodes), p.covers)
    todo = deque(k for k, d in enumerate(indeg) if d == 0)
    seen = 0
    while todo:
        k = todo.popleft()
        seen += 1
        for nxt in succ[k]:
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                todo.append(nxt)
    return seen == len(p.nodes)


def covers_raise_rank(p: HeckePoset) -> bool:
    return all(p.rank[b] == p.rank[a] + 1 for a, b, _ in p.covers)


def is_graded(p: HeckePoset) -> bool:
    """Every cover raises rank by one and all maximal chains have the same length."""
    if not p.nodes:
        return True
    if not is_acyclic(p) or not covers_raise_rank(p):
        return False
    lows = {p.rank[p.id_of(t)] for t in minimal_elements(p)}
    highs = {p.rank[p.id_of(t)] for t in maximal_elements(p)}
    return len(lows) == 1 and len(highs) == 1


def is_connected(p: HeckePoset) -> bool:
    if not p.nodes:
        return True
    nbrs: list[list[int]] = [[] for _ in p.nodes]
    for a, b, _ in p.covers:
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen = {0}
    todo = [0]
    while todo:
        for nxt in nbrs[todo.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return len(seen) == len(p.nodes)


def _check(alpha: Composition, beta: Composition) -> None:
    if not contains(beta, alpha):
        raise ShapeError(f"{beta} is not contained in {alpha}")


def inv_s0_formula(alpha: Composition, beta: Composition) -> int:
    _check(alpha, beta)
    lb, la = len(beta), len(alpha)
    total = sum(comb(alpha[i] - beta[i], 2) for i in range(lb))
    total += sum(comb(alpha[i - 1] + i - lb - 1, 2) for i in range(lb + 1, la + 1))
    return total - comb(la - lb, 3)


def rank_formula(alpha: Composition, beta: Composition) -> int:
    """Length of the poset: ``inv(S^row) - inv(S^0)`` in closed form."""
    _check(alpha, beta)
    return comb(sum(alpha) - sum(beta), 2) - inv_s0_formula(alpha, beta)


def set_subposet(p: HeckePoset) -> HeckePoset:
    """Induced subposet on the extended tableaux, keeping ranks.

    Extended tableaux form an up-set for the rdI covers, so the induced
    covers are exactly the covers of the subposet.
    """
    keep = [k for k, t in enumerate(p.nodes) if t.is_set()]
    new_id = {k: j for j, k in enumerate(keep)}
    covers = tuple(
        (new_id[a], new_id[b], i) for a, b, i in p.covers if a in new_id and b in new_id
    )
    return HeckePoset(
        p.shape,
        tuple(p.nodes[k] for k in keep),
        covers,
        tuple(p.rank[k] for k in keep),
    )


def node_id(t: Tableau) -> str:
    return "t" + "_".join(map(str, t.reading_word()))


def _dot_label(t: Tableau) -> str:
    return " ".join("(" + ",".join(map(str, r)) + ")" for r in t.rows)


def export_dot(p: HeckePoset, highlight: str | None = None) -> str:
    if highlight not in (None, "SET"):
        raise ValueError(f"unknown highlight {highlight!r}; only 'SET' is supported")
    lines = [f'digraph "{p.shape}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for t, r in zip(p.nodes, p.rank):
        style = ", style=bold" if highlight == "SET" and t.is_set() else ""
        lines.append(f'  {node_id(t)} [label="{_dot_label(t)}\\ninv+{r}"{style}];')
    for a, b, i in p.covers:
        lines.append(f'  {node_id(p.nodes[a])} -> {node_id(p.nodes[b])} [label="pi_{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
