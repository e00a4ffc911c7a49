"""Cell counts of the stratified spaces of real monic polynomials.

Four ambient spaces are supported, all of degree ``d``:

``FULL``            monic polynomials of degree ``d``;
``BALANCED``        those whose roots sum to zero (one coordinate less);
``SPHERE``          the unit sphere of ``FULL`` around the cone point;
``BALANCED_SPHERE`` the unit sphere of ``BALANCED``.

Each composition ``w`` of norm ``<= d`` and parity ``d`` labels one open cell
of codimension ``reduced_norm(w)``.  On the spheres the label ``(d)`` is the
cone point itself.  In ``BALANCED`` the cone point is the origin and drops out
of the sphere; in ``FULL`` the polynomials ``(z - a) ** d`` form a line whose
two open rays ``a > 0`` and ``a < 0`` both meet the sphere, so ``SPHERE``
counts ``(d)`` as two 0-cells.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Tuple

from .composition import Composition, norm, reduced_norm, sort_key, to_text
from .errors import ApexError, DegreeError, OrderError, ParityError
from .poset import UPTO, generate_omega, geq, hasse

FULL = "full"
BALANCED = "balanced"
SPHERE = "sphere"
BALANCED_SPHERE = "balanced_sphere"
AMBIENTS = (FULL, BALANCED, SPHERE, BALANCED_SPHERE)

_OFFSET = {FULL: 0, BALANCED: 1, SPHERE: 1, BALANCED_SPHERE: 2}


def _check(w: Composition, d: int):
    if d < 0:
        raise DegreeError(f"degree must be non-negative, got {d}")
    if norm(w) > d:
        raise DegreeError(f"{to_text(w)} has norm above {d}")
    if (d - norm(w)) % 2:
        raise ParityError(f"{to_text(w)} and degree {d} differ in parity")


def _ambient(ambient: str) -> str:
    if ambient not in _OFFSET:
        raise ValueError(f"unknown ambient {ambient!r}; choose from {', '.join(AMBIENTS)}")
    return ambient


def ambient_dimension(d: int, ambient: str) -> int:
    return d - _OFFSET[_ambient(ambient)]


def cell_dimension(w: Composition, d: int, ambient: str = FULL) -> int:
    _ambient(ambient)
    _check(w, d)
    if ambient == BALANCED_SPHERE and tuple(w) == (d,):
        raise ApexError(f"({d}) is the cone point and has no cell on the balanced sphere")
    return d - _OFFSET[ambient] - reduced_norm(w)


@dataclass(frozen=True)
class FVector:
    ambient: str
    d: int
    counts: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {"ambient": self.ambient, "d": self.d, "counts": list(self.counts)}


def cell_labels(d: int, ambient: str) -> List[Tuple[Composition, int]]:
    """Every cell as ``(label, multiplicity)``."""
    _ambient(ambient)
    out = []
    for w in generate_omega(d, UPTO):
        if tuple(w) == (d,) and d > 0:
            if ambient == BALANCED_SPHERE:
                continue
            out.append((w, 2 if ambient == SPHERE else 1))
        else:
            out.append((w, 1))
    return out


def f_vector(d: int, ambient: str = FULL) -> FVector:
    if d < 1:
        raise DegreeError(f"f-vectors need d >= 1, got {d}")
    if ambient == BALANCED_SPHERE and d < 2:
        raise DegreeError("the balanced sphere needs d >= 2")
    counts = [0] * (ambient_dimension(d, ambient) + 1)
    for w, mult in cell_labels(d, ambient):
        counts[d - _OFFSET[ambient] - reduced_norm(w)] += mult
    return FVector(ambient, d, tuple(counts))


def euler_characteristic(f) -> int:
    counts = f.counts if isinstance(f, FVector) else f
    return sum((-1) ** i * c for i, c in enumerate(counts))


def merge_closure_contains(w: Composition, candidate: Composition) -> bool:
    """Is ``candidate`` obtained from ``w`` by summing consecutive blocks?"""
    if norm(w) != norm(candidate) or len(candidate) > len(w):
        return False
    if not w:
        return not candidate
    i = 0
    for target in candidate:
        acc = 0
        while acc < target and i < len(w):
            acc += w[i]
            i += 1
        if acc != target:
            return False
    return i == len(w)


def ramification_o(w: Composition, w_tilde: Composition) -> int:
    """Number of ways to halve part of ``w_tilde`` back into the merges of ``w``."""
    if not geq(w, w_tilde):
        raise OrderError(f"{to_text(w)} does not degenerate to {to_text(w_tilde)}")
    expected = (norm(w_tilde) - norm(w)) // 2
    count = 0
    for halves in product(*(range(v // 2 + 1) for v in w_tilde)):
        rest = Composition(v - 2 * h for v, h in zip(w_tilde, halves) if v != 2 * h)
        if merge_closure_contains(w, rest):
            assert sum(halves) == expected
            count += 1
    return count


@dataclass
class StarComplex:
    center: Composition
    d: int
    cells: List[Dict] = field(default_factory=list)
    covers: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return reduced_norm(self.center)

    def counts(self) -> List[int]:
        out = [0] * (self.dimension + 1)
        for c in self.cells:
            out[c["dim"]] += 1
        return out

    def link(self) -> List[Dict]:
        """Cells below the top dimension."""
        return [c for c in self.cells if c["dim"] < self.dimension]

    def to_dict(self) -> dict:
        return {
            "kind": "star",
            "center": list(self.center),
            "d": self.d,
            "elements": [list(c["label"]) for c in self.cells],
            "dims": [c["dim"] for c in self.cells],
            "covers": [list(c) for c in self.covers],
        }


def normal_star(w: Composition, d: int, with_covers: bool = True) -> StarComplex:
    """Cells of the star normal to the stratum of ``w`` inside degree ``d``."""
    w = Composition(w)
    _check(w, d)
    labels = [x for x in generate_omega(d, UPTO) if geq(x, w)]
    labels.sort(key=lambda x: (reduced_norm(x), sort_key(x)))
    covers = hasse(labels).covers if with_covers else []
    r = reduced_norm(w)
    cells = [{"label": x, "dim": r - reduced_norm(x)} for x in labels]
    return StarComplex(w, d, cells, covers)


def star_multiplicity(w: Composition) -> int:
    return reduced_norm(w) + sum(1 for v in w if v == 2)
