"""Skew standard immaculate tableaux, their 0-Hecke actions, the skew Hecke poset, and QSym characteristics."""

from .hecke import HeckeResult, Outcome, apply, apply_word, check_relations, straighten_from_bottom, straighten_to_top
from .kernels import BACKEND
from .poset import HeckePoset, build_poset, export_dot, maximal_elements, minimal_elements, set_subposet
from .qsym import QSymF, TruncatedPoly, char_tableaux, fundamental_poly, gf_fillings, psi, to_poly
from .shapes import Cell, Composition, ShapeError, SkewShape
from .tableaux import (
    DescentKind,
    FillingFamily,
    Tableau,
    descent_set,
    generate_fillings,
    generate_nset,
    generate_set,
    generate_sit,
    inv,
    phi,
    s0,
    scol,
    srow,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Cell",
    "Composition",
    "DescentKind",
    "FillingFamily",
    "HeckePoset",
    "HeckeResult",
    "Outcome",
    "QSymF",
    "ShapeError",
    "SkewShape",
    "Tableau",
    "TruncatedPoly",
    "apply",
    "apply_word",
    "build_poset",
    "char_tableaux",
    "check_relations",
    "descent_set",
    "export_dot",
    "fundamental_poly",
    "generate_fillings",
    "generate_nset",
    "generate_set",
    "generate_sit",
    "gf_fillings",
    "inv",
    "maximal_elements",
    "minimal_elements",
    "phi",
    "psi",
    "s0",
    "scol",
    "set_subposet",
    "srow",
    "straighten_from_bottom",
    "straighten_to_top",
    "to_poly",
]
