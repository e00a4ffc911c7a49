"""Marked compositions and marker transport.

A marker picks one string or atom of an even-norm composition, named by its
first support position.  Merges and inserts carry markers along:

* an insert never moves the block the marker names, only its index;
* a merge inside a block keeps the block; a merge across the boundary of
  blocks ``p`` and ``p + 1`` fuses them, and a marker on either of the two
  lands on the start of the fused block.

Both rules reduce to "the start of the result block that contains the image
of the old marker", which is what the code computes.

Transport along a longer degeneration is *not* independent of the chosen
sequence of operations; :func:`transport` raises
:class:`AmbiguousTransportError` when two sequences disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .composition import (
    Composition,
    decompose,
    insert,
    merge,
    norm,
    reduced_norm,
    to_text,
)
from .errors import AmbiguousTransportError, InvalidMarkerError, OrderError, ParityError
from .poset import geq

Op = Tuple[str, int]  # ("M", j) merges j and j+1; ("I", j) inserts after j


def marker_set(w: Composition) -> List[int]:
    if norm(w) % 2:
        raise ParityError(f"markers need an even norm, got {to_text(w)}")
    return [b.start for b in decompose(w)]


@dataclass(frozen=True)
class BlockStructure:
    source: Composition
    blocks: Tuple[Tuple[int, Tuple[int, ...]], ...]  # (marker, members)

    def block_index(self, position: int) -> int:
        for p, (_, members) in enumerate(self.blocks):
            if position in members:
                return p
        raise IndexError(position)

    def marker_of(self, position: int) -> int:
        return self.blocks[self.block_index(position)][0]

    def to_dict(self) -> dict:
        return {"omega": list(self.source), "blocks": [{"marker": k, "members": list(m)} for k, m in self.blocks]}


def blocks(w: Composition) -> BlockStructure:
    dec = decompose(w)
    return BlockStructure(Composition(w), tuple((b.start, tuple(b.positions)) for b in dec))


@dataclass(frozen=True)
class MarkedComposition:
    omega: Composition
    marker: int

    def __post_init__(self):
        object.__setattr__(self, "omega", Composition(self.omega))
        if norm(self.omega) % 2 or self.marker not in marker_set(self.omega):
            raise InvalidMarkerError(f"{self.marker} is not a marker of {to_text(self.omega)}")

    def to_dict(self) -> dict:
        return {"omega": list(self.omega), "marker": self.marker}

    def __str__(self):
        return f"({to_text(self.omega)})@{self.marker}"


def marked_merge(m: MarkedComposition, j: int) -> MarkedComposition:
    w = merge(m.omega, j)
    k = m.marker if m.marker <= j else m.marker - 1
    return MarkedComposition(w, blocks(w).marker_of(k))


def marked_insert(m: MarkedComposition, j: int) -> MarkedComposition:
    w = insert(m.omega, j)
    return MarkedComposition(w, m.marker if j >= m.marker else m.marker + 1)


def apply_op(m: MarkedComposition, op: Op) -> MarkedComposition:
    kind, j = op
    if kind == "M":
        return marked_merge(m, j)
    if kind == "I":
        return marked_insert(m, j)
    raise ValueError(f"unknown operation {op!r}")


def _moves(m: MarkedComposition, cap: int):
    q = len(m.omega)
    for j in range(1, q):
        yield ("M", j), marked_merge(m, j)
    if norm(m.omega) + 2 <= cap:
        for j in range(q + 1):
            yield ("I", j), marked_insert(m, j)


def transport_paths(big: MarkedComposition, target: Composition) -> Dict[int, Tuple[Op, ...]]:
    """One witness operation sequence for each marker reachable on ``target``.

    Every operation raises the reduced norm by one, so all sequences from
    ``big`` to ``target`` have the same length and a layered sweep that keeps
    only states still above ``target`` visits all of them.
    """
    target = Composition(target)
    if not geq(big.omega, target):
        raise OrderError(f"{to_text(big.omega)} does not degenerate to {to_text(target)}")
    cap = norm(target)
    layer: Dict[MarkedComposition, Tuple[Op, ...]] = {big: ()}
    for _ in range(reduced_norm(target) - reduced_norm(big.omega)):
        nxt: Dict[MarkedComposition, Tuple[Op, ...]] = {}
        for state, path in layer.items():
            for op, child in _moves(state, cap):
                if child not in nxt and geq(child.omega, target):
                    nxt[child] = path + (op,)
        layer = nxt
    return {s.marker: p for s, p in sorted(layer.items(), key=lambda kv: kv[0].marker) if s.omega == target}


def transport_targets(big: MarkedComposition, target: Composition) -> List[int]:
    return sorted(transport_paths(big, target))


def transport(big: MarkedComposition, target: Composition) -> int:
    paths = transport_paths(big, target)
    if len(paths) != 1:
        detail = "; ".join(f"{k} via {_fmt(p)}" for k, p in paths.items())
        raise AmbiguousTransportError(
            f"marker {big} lands on several markers of {to_text(target)}: {detail}",
            markers=tuple(paths),
        )
    return next(iter(paths))


def _fmt(path: Tuple[Op, ...]) -> str:
    return " ".join(f"{k}{j}" for k, j in path) or "(no ops)"


def find_disagreement(big: MarkedComposition, target: Composition) -> Optional[Tuple[Tuple[Op, ...], int, Tuple[Op, ...], int]]:
    paths = transport_paths(big, target)
    if len(paths) < 2:
        return None
    (k1, p1), (k2, p2) = list(paths.items())[:2]
    return p1, k1, p2, k2


def leads_to(big: MarkedComposition, small: MarkedComposition) -> bool:
    if not geq(big.omega, small.omega):
        return False
    return transport(big, small.omega) == small.marker


def xi_at_marker(m: MarkedComposition) -> Composition:
    """The string or atom that the marker names."""
    for b in decompose(m.omega):
        if b.start == m.marker:
            return b.element
    raise InvalidMarkerError(f"{m.marker} is not a marker of {to_text(m.omega)}")
