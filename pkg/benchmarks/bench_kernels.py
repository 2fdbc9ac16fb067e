"""Compare the compiled and pure-Python enumeration kernels on a few medium shapes.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import timeit

from skewhecke.kernels import backends
from skewhecke.shapes import SkewShape

SHAPES = [
    SkewShape((3, 3, 4)),
    SkewShape((4, 3, 4, 3), (2, 1, 2)),
    SkewShape((2, 3, 3, 3), (1, 2)),
]


def workloads(shape: SkewShape):
    sit = [a + b for a, b in zip(shape.row_constraints, shape.first_column_constraints)]
    # dual immaculate fillings: first column strict, rows weak
    strict, weak = shape.first_column_constraints, shape.row_constraints
    nvars = min(shape.size, 4)
    yield "standard_fillings", lambda mod: mod.standard_fillings(shape.size, sit)
    yield f"content_counts({nvars} vars)", lambda mod: mod.content_counts(shape.size, strict, weak, nvars)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    mods = backends()
    print(f"{'shape':<22} {'kernel':<26} " + " ".join(f"{name:>10}" for name in mods) + "   speedup")
    for shape in SHAPES:
        for label, fn in workloads(shape):
            results = {name: fn(mod) for name, mod in mods.items()}
            if len({repr(sorted(r.items()) if isinstance(r, dict) else r) for r in results.values()}) != 1:
                raise SystemExit(f"backends disagree on {shape} {label}")
            times = {
                name: min(timeit.repeat(lambda m=mod: fn(m), number=1, repeat=args.repeat))
                for name, mod in mods.items()
            }
            speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "       -"
            cells = " ".join(f"{t * 1000:8.1f}ms" for t in times.values())
            print(f"{str(shape):<22} {label:<26} {cells} {speed}")


if __name__ == "__main__":
    main()
