"""Backend selection for the enumeration kernels.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``SKEWHECKE_PURE_PYTHON`` is set to a non-empty value,
the pure-Python implementations are used.  Both produce identical output.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("SKEWHECKE_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

inversions = _impl.inversions
standard_fillings = _impl.standard_fillings
semistandard_fillings = _impl.semistandard_fillings
content_counts = _impl.content_counts


def backends() -> dict[str, object]:
    """Every importable backend module, keyed by name (used by tests and the benchmark)."""
    found: dict[str, object] = {"python": _pykernels}
    try:
        from . import _ckernels

        found["cython"] = _ckernels
    except ImportError:
        pass
    return found
