"""Command-line front end: ``skewhecke {enumerate,poset,char,gf,verify,straighten}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterator

from . import hecke, poset, qsym, verify
from .shapes import ShapeError, SkewShape, is_partition, skew_shapes
from .tableaux import DescentKind, FillingFamily, Tableau, TableauError, generate_nset, generate_set, generate_sit

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _comp(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError(f"composition parts must be positive: {text!r}")
    return parts


def _kind(text: str) -> DescentKind:
    try:
        return DescentKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _shape(args: argparse.Namespace) -> SkewShape:
    if args.outer is None:
        raise UsageError("--outer is required")
    return SkewShape(args.outer, args.inner or ())


def _emit(args: argparse.Namespace, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(data) -> str:
    return json.dumps(data, indent=2)


def cmd_enumerate(args: argparse.Namespace) -> int:
    shape = _shape(args)
    if args.set and args.nset:
        raise UsageError("--set and --nset are exclusive")
    tabs = generate_set(shape) if args.set else generate_nset(shape) if args.nset else generate_sit(shape)
    if args.format == "json":
        _emit(args, _dump({"shape": shape.to_json(), "count": len(tabs), "tableaux": [t.to_json()["rows"] for t in tabs]}))
    else:
        blocks = [f"{shape}: {len(tabs)} tableaux"] + [str(t) + "\n" for t in tabs]
        _emit(args, "\n".join(blocks))
    return EXIT_OK


def cmd_poset(args: argparse.Namespace) -> int:
    shape = _shape(args)
    p = poset.build_poset(shape)
    if args.format == "dot":
        _emit(args, poset.export_dot(p, "SET" if args.set else None))
    elif args.format == "json":
        _emit(args, _dump(p.to_json()))
    else:
        lines = [f"{shape}: {len(p)} tableaux, {len(p.covers)} covers"]
        lines.append(f"rank {poset.rank_formula(shape.outer, shape.inner)}")
        lines.append("minimal: " + ", ".join(t.label() for t in poset.minimal_elements(p)))
        lines.append("maximal: " + ", ".join(t.label() for t in poset.maximal_elements(p)))
        if args.set:
            q = poset.set_subposet(p)
            lines.append(f"extended: {len(q)} tableaux")
            lines.append("  minimal: " + ", ".join(t.label() for t in poset.minimal_elements(q)))
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_char(args: argparse.Namespace) -> int:
    shape = _shape(args)
    f = qsym.char_tableaux(shape, args.kind, args.set)
    _emit(args, str(f) if args.format == "text" else _dump(f.to_json()))
    return EXIT_OK


def cmd_gf(args: argparse.Namespace) -> int:
    shape = _shape(args)
    family = FillingFamily.parse(args.family) if args.family else qsym.family_for(args.kind, args.set)
    nvars = args.vars or max(shape.size, 1)
    g = qsym.gf_fillings(shape, family, nvars)
    _emit(args, str(g) if args.format == "text" else _dump({"family": str(family), **g.to_json()}))
    return EXIT_OK


def _parse_rows(text: str) -> list[list[int]]:
    rows = []
    for chunk in text.split("/"):
        chunk = chunk.strip()
        rows.append([] if chunk in ("", "-") else [int(v) for v in chunk.split(",")])
    return rows


def cmd_straighten(args: argparse.Namespace) -> int:
    shape = _shape(args)
    t = Tableau.from_rows(shape, _parse_rows(args.rows))
    if not t.is_sit():
        raise UsageError(f"{t.label()} is not a standard immaculate tableau of shape {shape}")
    if args.direction == "bottom":
        word = hecke.straighten_from_bottom(t)
    else:
        word = hecke.straighten_to_top(t)
    _emit(args, json.dumps(word) if args.format != "text" else " ".join(f"pi_{i}" for i in word))
    return EXIT_OK


# --- verification suites ----------------------------------------------------

Check = tuple[bool, str]


def _suite_relations(shape: SkewShape) -> Iterator[Check]:
    for kind in DescentKind:
        for on_set in (False, True):
            r = hecke.check_relations(kind, shape, on_set)
            yield r.ok, f"{shape} {kind.value}{' SET' if on_set else ''}: {r.witness or 'ok'}"


def _suite_poset(shape: SkewShape) -> Iterator[Check]:
    from .tableaux import inv, s0, srow

    p = poset.build_poset(shape)
    edges = poset.cover_digraph(shape, DescentKind.RDI)
    checks = {
        "unique minimum S0": poset.minimal_elements(p) == [s0(shape)],
        "unique maximum Srow": poset.maximal_elements(p) == [srow(shape)],
        "graded": poset.is_graded(p),
        "connected": poset.is_connected(p),
        "rank formula": poset.rank_formula(shape.outer, shape.inner) == inv(srow(shape)) - inv(s0(shape)),
        "Astar covers equal rdI": poset.cover_digraph(shape, DescentKind.ASTAR) == edges,
        "dI covers reversed": poset.cover_digraph(shape, DescentKind.DI) == poset.reversed_edges(edges),
        "Abarstar covers reversed": poset.cover_digraph(shape, DescentKind.ABARSTAR) == poset.reversed_edges(edges),
        "SET maximum Srow": poset.maximal_elements(poset.set_subposet(p)) == [srow(shape)],
    }
    for name, ok in checks.items():
        yield ok, f"{shape} {name}"


def _suite_closure(shape: SkewShape) -> Iterator[Check]:
    r = verify.closure_check(shape)
    yield r.ok, f"{shape} {r}"


def _suite_series(shape: SkewShape) -> Iterator[Check]:
    for kind in DescentKind:
        r = verify.composition_series_check(shape, kind)
        yield r.ok, f"{shape} {kind.value}: {r.witness or r.characteristic}"


def _suite_cyclicity(shape: SkewShape) -> Iterator[Check]:
    for kind in DescentKind:
        yield verify.cyclicity_check(shape, kind), f"{shape} {kind.value}"


def _suite_fillings(shape: SkewShape) -> Iterator[Check]:
    nvars = max(shape.size, 1)
    for kind in DescentKind:
        for on_set in (False, True):
            family = qsym.family_for(kind, on_set)
            lhs = qsym.to_poly(qsym.char_tableaux(shape, kind, on_set), nvars)
            ok = lhs == qsym.gf_fillings(shape, family, nvars)
            yield ok, f"{shape} {kind.value}{' SET' if on_set else ''} vs [{family}]"


def _suite_enumeration(shape: SkewShape) -> Iterator[Check]:
    r = verify.sit_count(shape)
    yield r.agrees, f"{shape} count {r.count} formula {r.formula}"


def _suite_schur(shape: SkewShape) -> Iterator[Check]:
    from .shapes import conjugate

    lam, mu = shape.outer, shape.inner
    if not (is_partition(lam) and is_partition(mu)) or shape.size == 0:
        return
    nvars = shape.size
    e = qsym.to_poly(qsym.char_tableaux(shape, DescentKind.DI, True), nvars)
    yield e == qsym.skew_schur_poly(lam, mu, nvars), f"{shape} extended = skew Schur"
    re = qsym.to_poly(qsym.char_tableaux(shape, DescentKind.RDI, True), nvars)
    mu_t = conjugate(mu) if mu else ()
    yield re == qsym.skew_schur_poly(conjugate(lam), mu_t, nvars), f"{shape} row-strict extended = transposed skew Schur"


def _suite_products(shape: SkewShape) -> Iterator[Check]:
    if len(shape.outer) != len(shape.inner) or shape.size == 0:
        return
    nvars = shape.size
    for kind, letter in ((DescentKind.DI, "h"), (DescentKind.RDI, "e")):
        lhs = qsym.to_poly(qsym.char_tableaux(shape, kind), nvars)
        yield lhs == qsym.hooked_product(shape, letter, nvars), f"{shape} {kind.value} = product of {letter}"


def _branch_suite(on_set: bool, m: int | None) -> Callable[[SkewShape], Iterator[Check]]:
    def run(shape: SkewShape) -> Iterator[Check]:
        if shape.inner:
            return
        n = shape.size
        for mm in ([m] if m else range(1, n + 1)):
            if not 1 <= mm <= n:
                raise UsageError(f"--m must lie in 1..{n}")
            for kind in DescentKind:
                fn = verify.branching_check_set if on_set else verify.branching_check
                r = fn(shape.outer, mm, kind)
                detail = "; ".join(r.witnesses[:3]) or "ok"
                yield r.ok, f"{shape} m={mm} {kind.value}{' SET' if on_set else ''}: {detail}"

    return run


def _suite_two_alphabet(shape: SkewShape) -> Iterator[Check]:
    if shape.inner or shape.size == 0:
        return
    n = shape.size
    for kind in (DescentKind.DI, DescentKind.RDI):
        yield qsym.two_alphabet_check(shape.outer, kind, n, n), f"{shape} {kind.value} over X+Y"


SUITES = [
    "relations",
    "poset",
    "closure",
    "series",
    "cyclicity",
    "fillings",
    "schur",
    "products",
    "two-alphabet",
    "branching",
    "branching-set",
    "enumeration",
]


def _suite(name: str, m: int | None) -> Callable[[SkewShape], Iterator[Check]]:
    table = {
        "relations": _suite_relations,
        "poset": _suite_poset,
        "closure": _suite_closure,
        "series": _suite_series,
        "cyclicity": _suite_cyclicity,
        "fillings": _suite_fillings,
        "schur": _suite_schur,
        "products": _suite_products,
        "two-alphabet": _suite_two_alphabet,
        "branching": _branch_suite(False, m),
        "branching-set": _branch_suite(True, m),
        "enumeration": _suite_enumeration,
    }
    return table[name]


def cmd_verify(args: argparse.Namespace) -> int:
    names = SUITES if args.suite == "all" else [args.suite]
    if args.all:
        shapes = list(skew_shapes(args.maxn))
    else:
        shapes = [_shape(args)]
    report: dict[str, dict] = {}
    all_ok = True
    for name in names:
        run = _suite(name, args.m)
        if name == "two-alphabet" and args.all:
            pool = [s for s in shapes if s.size <= min(args.maxn, 5)]
        else:
            pool = shapes
        checked, failures = 0, []
        for shape in pool:
            for ok, detail in run(shape):
                checked += 1
                if not ok:
                    failures.append(detail)
        all_ok = all_ok and not failures
        report[name] = {"checked": checked, "failed": len(failures), "failures": failures[:20]}
        print(f"{name}: {checked - len(failures)}/{checked} passed", file=sys.stderr)
    _emit(args, _dump({"ok": all_ok, "suites": report}))
    return EXIT_OK if all_ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewhecke",
        description="Skew standard immaculate tableaux, 0-Hecke actions and quasisymmetric characteristics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: tuple[str, ...], default: str) -> None:
        p.add_argument("--outer", type=_comp, help="outer composition, e.g. 4,2,4")
        p.add_argument("--inner", type=_comp, default=(), help="inner composition (omit for a straight shape)")
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("enumerate", help="list standard immaculate tableaux of a shape")
    common(p, ("json", "text"), "text")
    p.add_argument("--set", action="store_true", help="only extended tableaux (all columns increase)")
    p.add_argument("--nset", action="store_true", help="only tableaux with a non-increasing column")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("poset", help="build the skew immaculate Hecke poset")
    common(p, ("json", "dot", "text"), "text")
    p.add_argument("--set", action="store_true", help="highlight (dot) or summarise (text) the extended tableaux")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("char", help="quasisymmetric characteristic in the fundamental basis")
    common(p, ("json", "text"), "json")
    p.add_argument("--kind", type=_kind, default=DescentKind.DI, help="di, rdi, astar or abarstar")
    p.add_argument("--set", action="store_true", help="sum over extended tableaux only")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("gf", help="generating function of semistandard fillings")
    common(p, ("json", "text"), "json")
    p.add_argument("--kind", type=_kind, default=DescentKind.DI, help="selects the matching filling family")
    p.add_argument("--set", action="store_true", help="use the family that matches extended tableaux")
    p.add_argument("--family", help='explicit family, e.g. "1st col <, rows <="')
    p.add_argument("--vars", type=int, help="number of variables (default: number of cells)")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser(
        "straighten",
        help="generator word joining a tableau to S0 or S^row",
        description=(
            "Prints the word [j1, ..., jr] meaning pi_j1 ... pi_jr: the LAST index is applied FIRST. "
            "'bottom' gives a word w with w(S0) = T, 'top' gives w with w(T) = S^row, both for the rdI action."
        ),
    )
    common(p, ("json", "text"), "json")
    p.add_argument("--rows", required=True, help="entries by row, bottom row first, e.g. 2,7/1,9/6,11/3,4/5,8,10")
    p.add_argument("--direction", choices=("bottom", "top"), default="bottom")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("verify", help="run verification suites; exit 1 on any failure")
    common(p, ("json",), "json")
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--m", type=int, help="threshold for the branching suites (default: every m)")
    p.add_argument("--all", action="store_true", help="every skew shape with |outer| <= --maxn")
    p.add_argument("--maxn", type=int, default=6)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ShapeError, TableauError, ValueError) as exc:
        print(f"skewhecke: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
