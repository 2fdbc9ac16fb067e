import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from skewhecke.shapes import SkewShape  # noqa: E402


@st.composite
def skew_shapes(draw, max_n: int = 6, min_cells: int = 0):
    n = draw(st.integers(min_value=max(min_cells, 1), max_value=max_n))
    cuts = draw(st.sets(st.integers(1, n - 1), max_size=n - 1)) if n > 1 else set()
    edges = [0, *sorted(cuts), n]
    outer = tuple(b - a for a, b in zip(edges, edges[1:]))
    length = draw(st.integers(0, len(outer)))
    inner = tuple(draw(st.integers(1, a)) for a in outer[:length])
    shape = SkewShape(outer, inner)
    if shape.size < min_cells:
        shape = SkewShape(outer)
    return shape
