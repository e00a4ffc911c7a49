"""Local cell model of the space of trajectories near a tangency of type ``w``.

A nearby trajectory meets each tangency zone ``i`` in a pattern from the
degree-``w[i]`` universe; the zones are laid end to end along the trajectory
(:func:`kappa`).  A cell is such a product label together with a marker on
the concatenated pattern, i.e. a choice of which component of the
intersection is being followed.  Its dimension is the drop in reduced norm.

Boundary incidences come from one merge or insert inside one zone, with the
marker carried by the same operation on the concatenation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Tuple

from .cells import FVector
from .composition import Composition, is_bullet, norm, reduced_norm, sort_key, to_text
from .errors import CompositionError, DomainError
from .markers import MarkedComposition, marked_insert, marked_merge, marker_set, xi_at_marker
from .poset import UPTO, generate_omega


@dataclass(frozen=True)
class ProductLabel:
    components: Tuple[Composition, ...]
    capacities: Composition

    def __post_init__(self):
        comps = tuple(Composition(c) for c in self.components)
        caps = Composition(self.capacities)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "capacities", caps)
        if len(comps) != len(caps):
            raise CompositionError("one component per tangency zone is required")
        for c, cap in zip(comps, caps):
            if norm(c) > cap or (cap - norm(c)) % 2:
                raise CompositionError(f"component {to_text(c)} does not fit capacity {cap}")

    def offsets(self) -> List[int]:
        out, acc = [], 0
        for c in self.components:
            out.append(acc)
            acc += len(c)
        return out

    def reduced_norm(self) -> int:
        return sum(reduced_norm(c) for c in self.components)

    def sort_key(self):
        return tuple(sort_key(c) for c in self.components)

    def to_list(self) -> List[List[int]]:
        return [list(c) for c in self.components]

    def __str__(self):
        return "[" + " | ".join(to_text(c) for c in self.components) + "]"


def kappa(label) -> Composition:
    """Concatenate the nonempty components in order."""
    comps = label.components if isinstance(label, ProductLabel) else label
    return Composition(v for c in comps for v in c)


def enumerate_labels(w: Composition) -> List[ProductLabel]:
    w = Composition(w)
    if not w:
        raise DomainError("the base pattern must be nonempty")
    pools = [generate_omega(v, UPTO) for v in w]
    return [ProductLabel(combo, w) for combo in product(*pools)]


@dataclass(frozen=True)
class Cell:
    label: ProductLabel
    marker: int
    dim: int
    stratum: Composition

    def to_dict(self) -> dict:
        return {
            "label": self.label.to_list(),
            "marker": self.marker,
            "dim": self.dim,
            "stratum": list(self.stratum),
        }


@dataclass
class TrajectoryComplex:
    base: Composition
    cells: List[Cell]
    covers: List[Tuple[int, int]] = field(default_factory=list)

    def f_vector(self) -> List[int]:
        if not self.cells:
            return []
        counts = [0] * (max(c.dim for c in self.cells) + 1)
        for c in self.cells:
            counts[c.dim] += 1
        return counts

    def find(self, components, marker: int) -> int:
        label = ProductLabel(components, self.base)
        for i, c in enumerate(self.cells):
            if c.label == label and c.marker == marker:
                return i
        raise KeyError(f"{label}@{marker}")

    def faces(self, index: int) -> List[Cell]:
        return [self.cells[j] for i, j in self.covers if i == index]

    def to_dict(self) -> dict:
        return {
            "base": list(self.base),
            "cells": [c.to_dict() for c in self.cells],
            "covers": [list(c) for c in self.covers],
        }


# kept as a separate name: the link is a complex of the same shape
CellComplex = TrajectoryComplex


def _require_base(w: Composition) -> Composition:
    w = Composition(w)
    if not is_bullet(w):
        raise DomainError(f"{to_text(w)} is not a string or an atom")
    return w


def stratum_label(label, marker: int) -> Composition:
    return xi_at_marker(MarkedComposition(kappa(label), marker))


def label_moves(label: ProductLabel, marker: int):
    """Yield ``(new_label, new_marker)`` for every single-zone operation."""
    big = MarkedComposition(kappa(label), marker)
    for i, (comp, off) in enumerate(zip(label.components, label.offsets())):
        rest = label.components
        for j in range(1, len(comp)):
            new = rest[:i] + (comp[: j - 1] + (comp[j - 1] + comp[j],) + comp[j + 1:],) + rest[i + 1:]
            yield ProductLabel(new, label.capacities), marked_merge(big, off + j).marker
        if norm(comp) + 2 <= label.capacities[i]:
            for j in range(len(comp) + 1):
                new = rest[:i] + (comp[:j] + (2,) + comp[j:],) + rest[i + 1:]
                yield ProductLabel(new, label.capacities), marked_insert(big, off + j).marker


def build_t_model(w: Composition) -> TrajectoryComplex:
    w = _require_base(w)
    top = reduced_norm(w)
    cells = []
    for label in enumerate_labels(w):
        k = kappa(label)
        if not k:
            continue
        for m in marker_set(k):
            cells.append(Cell(label, m, top - label.reduced_norm(), stratum_label(label, m)))
    cells.sort(key=lambda c: (-c.dim, c.label.sort_key(), c.marker))
    index = {(c.label, c.marker): i for i, c in enumerate(cells)}
    covers = set()
    for i, c in enumerate(cells):
        for label, m in label_moves(c.label, c.marker):
            covers.add((i, index[(label, m)]))
    return TrajectoryComplex(w, cells, sorted(covers))


def t_f_vector(w: Composition) -> FVector:
    return FVector("trajectory", norm(_require_base(w)), tuple(build_t_model(w).f_vector()))


def link_complex(w: Composition) -> TrajectoryComplex:
    """Cells away from the apex, one dimension lower."""
    full = build_t_model(w)
    keep = [i for i, c in enumerate(full.cells) if kappa(c.label) != full.base]
    renum = {old: new for new, old in enumerate(keep)}
    cells = [
        Cell(full.cells[i].label, full.cells[i].marker, full.cells[i].dim - 1, full.cells[i].stratum)
        for i in keep
    ]
    covers = [(renum[a], renum[b]) for a, b in full.covers if a in renum and b in renum]
    return TrajectoryComplex(full.base, cells, covers)


def fiber_report(w: Composition) -> Dict[ProductLabel, int]:
    """How many markers (trajectory components) sit over each label."""
    w = _require_base(w)
    out = {}
    for label in enumerate_labels(w):
        k = kappa(label)
        out[label] = len(marker_set(k)) if k else 0
    return out
