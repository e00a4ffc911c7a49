"""Combinatorics of real root patterns, their degenerations, and the cell
structures they induce on polynomial spaces and on trajectory spaces."""

from .composition import Composition, decompose, from_text, insert, merge, to_text
from .errors import TangencyError
from .poset import bullet_geq, generate_bullet, generate_omega, geq, hasse

__all__ = [
    "Composition",
    "TangencyError",
    "bullet_geq",
    "decompose",
    "from_text",
    "generate_bullet",
    "generate_omega",
    "geq",
    "hasse",
    "insert",
    "merge",
    "to_text",
]
__version__ = "0.1.0"
