"""Pure-Python versions of the enumeration kernels.

Every kernel works on an abstract list of positions ``0..npos-1``.  Position
``p`` carries a list of earlier positions ``q < p`` whose value must be
strictly smaller (``strict``) or not larger (``weak``) than the value at ``p``.
Cells of a skew diagram are laid out in that order by :mod:`skewhecke.shapes`,
so every row/column constraint points backwards.
"""

from __future__ import annotations


def inversions(word) -> int:
    word = list(word)
    count = 0
    n = len(word)
    for p in range(n):
        a = word[p]
        for q in range(p + 1, n):
            if a > word[q]:
                count += 1
    return count


def standard_fillings(npos: int, strict: list[list[int]]) -> list[tuple[int, ...]]:
    """All bijections ``positions -> 1..npos`` honouring the strict constraints."""
    values = [0] * npos
    used = [False] * (npos + 2)
    out: list[tuple[int, ...]] = []

    def place(p: int) -> None:
        if p == npos:
            out.append(tuple(values))
            return
        low = 0
        for q in strict[p]:
            if values[q] > low:
                low = values[q]
        for v in range(low + 1, npos + 1):
            if not used[v]:
                used[v] = True
                values[p] = v
                place(p + 1)
                used[v] = False

    place(0)
    return out


def _lower_bound(p: int, values: list[int], strict, weak) -> int:
    low = 1
    for q in strict[p]:
        if values[q] + 1 > low:
            low = values[q] + 1
    for q in weak[p]:
        if values[q] > low:
            low = values[q]
    return low


def semistandard_fillings(
    npos: int, strict: list[list[int]], weak: list[list[int]], max_entry: int
) -> list[tuple[int, ...]]:
    """All fillings with entries in ``1..max_entry`` (repeats allowed)."""
    values = [0] * npos
    out: list[tuple[int, ...]] = []

    def place(p: int) -> None:
        if p == npos:
            out.append(tuple(values))
            return
        for v in range(_lower_bound(p, values, strict, weak), max_entry + 1):
            values[p] = v
            place(p + 1)

    place(0)
    return out


def content_counts(
    npos: int, strict: list[list[int]], weak: list[list[int]], max_entry: int
) -> dict[tuple[int, ...], int]:
    """Map each content vector (multiplicities of ``1..max_entry``) to its number of fillings."""
    values = [0] * npos
    content = [0] * max_entry
    out: dict[tuple[int, ...], int] = {}

    def place(p: int) -> None:
        if p == npos:
            key = tuple(content)
            out[key] = out.get(key, 0) + 1
            return
        for v in range(_lower_bound(p, values, strict, weak), max_entry + 1):
            values[p] = v
            content[v - 1] += 1
            place(p + 1)
            content[v - 1] -= 1

    place(0)
    return out
