"""Quasisymmetric functions in the fundamental basis and exact polynomial expansions.

Products are never taken in the F-basis.  Every multiplicative identity is
checked after expanding into :class:`TruncatedPoly`, where multiplication is
ordinary polynomial multiplication.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping

from . import kernels
from .shapes import (
    Composition,
    ShapeError,
    SkewShape,
    comp_of,
    complement,
    composition,
    compositions,
    conjugate,
    contains,
    is_partition,
    set_of,
    subcompositions,
)
from .tableaux import FAMILY_OF, DescentKind, FillingFamily, descent_set, generate_set, generate_sit

Exponent = tuple[int, ...]


def _names(prefix: str, count: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{k}" for k in range(1, count + 1))


@dataclass(frozen=True)
class TruncatedPoly:
    """Integer polynomial in an ordered, finite list of variables."""

    vars: tuple[str, ...]
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for exp, c in self.terms.items():
            exp = tuple(exp)
            if len(exp) != len(self.vars):
                raise ValueError(f"exponent {exp} does not match {len(self.vars)} variables")
            if c:
                clean[exp] = int(c)
        object.__setattr__(self, "vars", tuple(self.vars))
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, nvars: int, prefix: str = "x") -> TruncatedPoly:
        return cls(_names(prefix, nvars))

    @classmethod
    def one(cls, nvars: int, prefix: str = "x") -> TruncatedPoly:
        return cls(_names(prefix, nvars), {(0,) * nvars: 1})

    @classmethod
    def in_vars(cls, nvars: int, terms: Mapping[Exponent, int], prefix: str = "x") -> TruncatedPoly:
        return cls(_names(prefix, nvars), terms)

    def _same(self, other: TruncatedPoly) -> None:
        if self.vars != other.vars:
            raise ValueError(f"variable lists differ: {self.vars} vs {other.vars}")

    def __add__(self, other: TruncatedPoly) -> TruncatedPoly:
        self._same(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return TruncatedPoly(self.vars, out)

    def __neg__(self) -> TruncatedPoly:
        return TruncatedPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: TruncatedPoly) -> TruncatedPoly:
        return self + (-other)

    def __mul__(self, other: TruncatedPoly | int) -> TruncatedPoly:
        if isinstance(other, int):
            return TruncatedPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        self._same(other)
        out: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return TruncatedPoly(self.vars, out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def embed(self, names: tuple[str, ...]) -> TruncatedPoly:
        """Re-express in a larger variable list containing all of ``self.vars``."""
        where = [names.index(v) for v in self.vars]
        out = {}
        for exp, c in self.terms.items():
            big = [0] * len(names)
            for k, a in zip(where, exp):
                big[k] = a
            out[tuple(big)] = c
        return TruncatedPoly(names, out)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), reverse=True)

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"exp": list(e), "coeff": c} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict) -> TruncatedPoly:
        return cls(tuple(data["vars"]), {tuple(t["exp"]): t["coeff"] for t in data["terms"]})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                v if a == 1 else f"{v}^{a}" for v, a in zip(self.vars, exp) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class QSymF:
    """Homogeneous quasisymmetric function of a fixed degree, in the fundamental basis."""

    degree: int
    coeffs: Mapping[Composition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for alpha, c in self.coeffs.items():
            alpha = tuple(alpha)
            if sum(alpha) != self.degree:
                raise ShapeError(f"{alpha} is not a composition of {self.degree}")
            if c:
                clean[alpha] = int(c)
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def F(cls, alpha: Iterable[int]) -> QSymF:
        alpha = composition(alpha)
        return cls(sum(alpha), {alpha: 1})

    def _same(self, other: QSymF) -> None:
        if self.degree != other.degree:
            raise ValueError(f"degrees differ: {self.degree} vs {other.degree}")

    def __add__(self, other: QSymF) -> QSymF:
        self._same(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return QSymF(self.degree, out)

    def __neg__(self) -> QSymF:
        return QSymF(self.degree, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other: QSymF) -> QSymF:
        return self + (-other)

    def __mul__(self, k: int) -> QSymF:
        if not isinstance(k, int):
            return NotImplemented
        return QSymF(self.degree, {a: c * k for a, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSymF):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.coeffs.items())))

    def total(self) -> int:
        """Sum of coefficients (the dimension when this is a characteristic)."""
        return sum(self.coeffs.values())

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"comp": list(a), "coeff": c} for a, c in sorted(self.coeffs.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> QSymF:
        return cls(data["degree"], {tuple(t["comp"]): t["coeff"] for t in data["terms"]})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for a, c in sorted(self.coeffs.items()):
            name = "F(" + ",".join(map(str, a)) + ")"
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")


def psi(f: QSymF) -> QSymF:
    return QSymF(f.degree, {complement(a): c for a, c in f.coeffs.items()})


@lru_cache(maxsize=None)
def _fundamental_terms(alpha: Composition, nvars: int) -> dict[Exponent, int]:
    n = sum(alpha)
    rises = set_of(alpha)
    out: dict[Exponent, int] = defaultdict(int)
    for idx in combinations_with_replacement(range(nvars), n):
        if all(idx[j - 1] < idx[j] for j in rises):
            exp = [0] * nvars
            for k in idx:
                exp[k] += 1
            out[tuple(exp)] += 1
    return dict(out)


def fundamental_poly(alpha: Iterable[int], vars: int) -> TruncatedPoly:
    """``F_alpha`` in ``x1..x_vars`` by direct enumeration of index chains."""
    if vars < 1:
        raise ValueError("vars must be at least 1")
    alpha = composition(alpha)
    return TruncatedPoly.in_vars(vars, _fundamental_terms(alpha, vars))


def to_poly(f: QSymF, vars: int) -> TruncatedPoly:
    out = TruncatedPoly.zero(vars)
    for alpha, c in f.coeffs.items():
        out = out + fundamental_poly(alpha, vars) * c
    return out


def char_tableaux(shape: SkewShape, kind: DescentKind, restrict_to_set: bool = False) -> QSymF:
    kind = DescentKind(kind)
    n = shape.size
    basis = generate_set(shape) if restrict_to_set else generate_sit(shape)
    out: dict[Composition, int] = defaultdict(int)
    for t in basis:
        out[comp_of(descent_set(t, kind), n)] += 1
    return QSymF(n, out)


def gf_fillings(
    shape: SkewShape, family: FillingFamily, vars: int, prefix: str = "x"
) -> TruncatedPoly:
    """``sum x^T`` over fillings of ``shape`` in ``family`` with entries at most ``vars``."""
    if vars < 1:
        raise ValueError("vars must be at least 1")
    strict, weak = family.constraints(shape)
    counts = kernels.content_counts(shape.size, strict, weak, vars)
    return TruncatedPoly.in_vars(vars, counts, prefix)


def family_for(kind: DescentKind, restrict_to_set: bool = False) -> FillingFamily:
    return FAMILY_OF[DescentKind(kind), bool(restrict_to_set)]


def _horizontal_strips(outer: Composition, inner_bound: Composition) -> Iterable[Composition]:
    """Partitions ``nu`` with ``inner_bound ⊆ nu ⊆ outer`` and ``outer/nu`` a horizontal strip."""
    # outer/nu is a horizontal strip iff outer[i+1] <= nu[i] <= outer[i].
    rows = len(outer)

    def rec(i: int, prev: int) -> Iterable[list[int]]:
        if i == rows:
            yield []
            return
        low = max(outer[i + 1] if i + 1 < rows else 0, inner_bound[i] if i < len(inner_bound) else 0)
        high = min(outer[i], prev)
        for v in range(low, high + 1):
            for rest in rec(i + 1, v):
                yield [v, *rest]

    for nu in rec(0, outer[0] if outer else 0):
        yield tuple(p for p in nu if p)


def skew_schur_poly(lam: Iterable[int], mu: Iterable[int], vars: int) -> TruncatedPoly:
    """Skew Schur polynomial ``s_{lam/mu}`` as a sum over chains of horizontal strips.

    ``x_vars`` fills the last strip removed from ``lam``, and so on down to ``x_1``.
    """
    lam, mu = tuple(lam), tuple(mu)
    if not (is_partition(lam) and is_partition(mu)):
        raise ShapeError(f"{lam} and {mu} must both be partitions")
    if not contains(mu, lam):
        raise ShapeError(f"{mu} is not contained in {lam}")
    if vars < 1:
        raise ValueError("vars must be at least 1")
    out: dict[Exponent, int] = defaultdict(int)

    def rec(current: Composition, k: int, exp: list[int]) -> None:
        if k == 0:
            if current == mu:
                out[tuple(exp)] += 1
            return
        for nu in _horizontal_strips(current, mu):
            exp[k - 1] = sum(current) - sum(nu)
            rec(nu, k - 1, exp)
        exp[k - 1] = 0

    rec(lam, vars, [0] * vars)
    return TruncatedPoly.in_vars(vars, out)


def complete_homogeneous(k: int, vars: int) -> TruncatedPoly:
    out: dict[Exponent, int] = defaultdict(int)
    for idx in combinations_with_replacement(range(vars), k):
        exp = [0] * vars
        for j in idx:
            exp[j] += 1
        out[tuple(exp)] += 1
    return TruncatedPoly.in_vars(vars, out)


def elementary(k: int, vars: int) -> TruncatedPoly:
    out: dict[Exponent, int] = {}
    for idx in combinations(range(vars), k):
        exp = [0] * vars
        for j in idx:
            exp[j] = 1
        out[tuple(exp)] = 1
    return TruncatedPoly.in_vars(vars, out)


def hooked_product(shape: SkewShape, kind: str, vars: int) -> TruncatedPoly:
    """``prod h_{alpha_i - beta_i}`` (kind ``"h"``) or ``prod e_{alpha_i - beta_i}`` (kind ``"e"``)."""
    if len(shape.outer) != len(shape.inner):
        raise ShapeError(f"{shape}: outer and inner must have the same length")
    if kind not in ("h", "e"):
        raise ValueError(f"kind must be 'h' or 'e', got {kind!r}")
    factor = complete_homogeneous if kind == "h" else elementary
    out = TruncatedPoly.one(vars)
    for a, b in zip(shape.outer, shape.inner):
        out = out * factor(a - b, vars)
    return out


def two_alphabet_check(
    alpha: Iterable[int], kind: DescentKind, xvars: int, yvars: int
) -> bool:
    """Compare the gf of ``alpha`` over ``X`` then ``Y`` with ``sum_beta gf_beta(X) gf_{alpha/beta}(Y)``.

    ``yvars == 0`` is allowed: only ``beta = alpha`` survives on the right.
    """
    kind = DescentKind(kind)
    if kind not in (DescentKind.DI, DescentKind.RDI):
        raise ValueError("the two-alphabet identity is stated for dI and rdI")
    if xvars < 1 or yvars < 0:
        raise ValueError("need xvars >= 1 and yvars >= 0")
    alpha = composition(alpha)
    family = family_for(kind)
    names = _names("x", xvars) + _names("y", yvars)
    left = gf_fillings(SkewShape(alpha), family, xvars + yvars)
    left = TruncatedPoly(names, left.terms)
    right = TruncatedPoly(names)
    for beta in subcompositions(alpha):
        low = _gf_or_constant(SkewShape(beta), family, xvars, "x")
        high = _gf_or_constant(SkewShape(alpha, beta), family, yvars, "y")
        if low.is_zero() or high.is_zero():
            continue
        right = right + low.embed(names) * high.embed(names)
    return left == right


def _gf_or_constant(shape: SkewShape, family: FillingFamily, nvars: int, prefix: str) -> TruncatedPoly:
    if shape.size == 0:
        return TruncatedPoly.one(nvars, prefix)
    if nvars == 0:
        return TruncatedPoly.zero(0, prefix)
    return gf_fillings(shape, family, nvars, prefix)


def transition_matrix(n: int, kind: DescentKind = DescentKind.DI) -> tuple[list[Composition], list[list[int]]]:
    """Rows: the straight characteristics for ``alpha ⊨ n`` expanded in ``F``."""
    comps = list(compositions(n))
    rows = []
    for alpha in comps:
        f = char_tableaux(SkewShape(alpha), kind)
        rows.append([f.coeffs.get(gamma, 0) for gamma in comps])
    return comps, rows


def determinant(matrix: list[list[int]]) -> int:
    size = len(matrix)
    m = [[Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] / m[col][col]
            if factor:
                for c in range(col, size):
                    m[r][c] -= factor * m[col][c]
    return int(det)


def is_unimodular_basis(n: int, kind: DescentKind = DescentKind.DI) -> bool:
    """The characteristics of straight shapes of size ``n`` form a Z-basis of QSym_n."""
    _, rows = transition_matrix(n, kind)
    return abs(determinant(rows)) == 1


def transpose_partition_pair(lam: Composition, mu: Composition) -> tuple[Composition, Composition]:
    return conjugate(lam), conjugate(mu) if mu else ()
