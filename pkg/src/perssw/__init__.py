"""Persistent cohomology over Z/2, Steenrod squares and persistent Stiefel-Whitney classes."""

from .cech import cech_filtration, meb_radius
from .complex import (
    Cochain,
    ComplexError,
    FilteredComplex,
    coboundary,
    is_cocycle,
    restrict,
    sub_complex,
    unit_cochain,
)
from .io import load_complex, load_points, save_complex
from .ops import CoproductTerm, cup_i_coproduct, cup_product, steenrod_square
from .persistence import BasisError, PersistentClass, basis_at_scale, persistent_cohomology, stable_interval
from .plot import emit_barcode_plot
from .sampling import nsw_sample_bound
from .wu import SWReport, WuClass, persistent_sw, sw_at_scale, wu_class
from .z2 import BitMatrix, is_cohomologous, row_reduce, solve

__version__ = "0.1.0"

__all__ = [
    "BasisError",
    "BitMatrix",
    "Cochain",
    "ComplexError",
    "CoproductTerm",
    "FilteredComplex",
    "PersistentClass",
    "SWReport",
    "WuClass",
    "basis_at_scale",
    "cech_filtration",
    "coboundary",
    "cup_i_coproduct",
    "cup_product",
    "emit_barcode_plot",
    "is_cocycle",
    "is_cohomologous",
    "load_complex",
    "load_points",
    "meb_radius",
    "nsw_sample_bound",
    "persistent_cohomology",
    "persistent_sw",
    "restrict",
    "row_reduce",
    "save_complex",
    "solve",
    "stable_interval",
    "steenrod_square",
    "sub_complex",
    "sw_at_scale",
    "unit_cochain",
    "wu_class",
]
