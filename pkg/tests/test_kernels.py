import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewhecke import kernels
from skewhecke.shapes import SkewShape

BACKENDS = kernels.backends()
needs_cython = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")


@st.composite
def constraint_dags(draw, max_pos=6):
    npos = draw(st.integers(0, max_pos))
    strict, weak = [], []
    for p in range(npos):
        earlier = list(range(p))
        s = draw(st.lists(st.sampled_from(earlier), unique=True, max_size=2)) if earlier else []
        rest = [q for q in earlier if q not in s]
        w = draw(st.lists(st.sampled_from(rest), unique=True, max_size=2)) if rest else []
        strict.append(sorted(s))
        weak.append(sorted(w))
    return npos, strict, weak


def test_inversions():
    for mod in BACKENDS.values():
        assert mod.inversions([5, 4, 2, 3, 1]) == 9
        assert mod.inversions([]) == 0


def test_standard_fillings_count_on_shape():
    shape = SkewShape((4, 2, 4), (2, 1, 2))
    preds = [a + b for a, b in zip(shape.row_constraints, shape.first_column_constraints)]
    for mod in BACKENDS.values():
        assert len(mod.standard_fillings(shape.size, preds)) == 30


@needs_cython
@settings(max_examples=80, deadline=None)
@given(constraint_dags(), st.integers(1, 3))
def test_backends_agree(dag, max_entry):
    npos, strict, weak = dag
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    assert py.standard_fillings(npos, strict) == cy.standard_fillings(npos, strict)
    assert py.semistandard_fillings(npos, strict, weak, max_entry) == cy.semistandard_fillings(npos, strict, weak, max_entry)
    assert py.content_counts(npos, strict, weak, max_entry) == cy.content_counts(npos, strict, weak, max_entry)


@needs_cython
@given(st.lists(st.integers(-5, 5), max_size=12))
def test_inversions_agree(word):
    assert BACKENDS["python"].inversions(word) == BACKENDS["cython"].inversions(word)


def test_env_forces_python():
    env = dict(os.environ, SKEWHECKE_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from skewhecke import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    ).stdout
    assert out.strip() == "python"
