"""Compositions: ordered lists of positive multiplicities.

A composition ``w = (w_1, ..., w_q)`` records the multiplicities of the
distinct real roots of a polynomial, listed along the real line.  Positions
are 1-based throughout the public API (``merge(w, 1)`` merges the first two
entries), matching the way multiplicity patterns are usually written.

The sign of the witness polynomial ``prod_i (u - i) ** w_i`` between support
points drives the string/atom deconstruction; :func:`gap_sign` exposes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from .errors import CompositionError, ParityError

STRING = "string"
ATOM = "atom"


class Composition(tuple):
    """Immutable composition; behaves like a tuple of positive ints."""

    def __new__(cls, entries: Iterable[int] = ()):
        values = tuple(entries)
        for v in values:
            if isinstance(v, bool) or int(v) != v or v < 1:
                raise CompositionError(f"entries must be positive integers, got {v!r}")
        return super().__new__(cls, (int(v) for v in values))

    def __repr__(self):
        return f"Composition({', '.join(map(str, self))})"

    def __str__(self):
        return to_text(self)

    @property
    def norm(self) -> int:
        return sum(self)

    @property
    def reduced_norm(self) -> int:
        return sum(self) - len(self)


def make_composition(entries: Iterable[int]) -> Composition:
    return Composition(entries)


def sort_key(w: Composition) -> Tuple[int, Tuple[int, ...]]:
    """Canonical order on compositions: by length, then entrywise."""
    return (len(w), tuple(w))


def sorted_compositions(ws: Iterable[Composition]) -> List[Composition]:
    return sorted(set(ws), key=sort_key)


def norm(w: Composition) -> int:
    return sum(w)


def reduced_norm(w: Composition) -> int:
    """Sum of ``w_i - 1``; zero for the empty composition."""
    return sum(w) - len(w)


def virtual_multiplicity(w: Composition) -> int:
    return sum(v // 2 for v in w)


def merge(w: Composition, j: int) -> Composition:
    """Add entries ``j`` and ``j + 1`` together (1-based)."""
    if not 1 <= j <= len(w) - 1:
        raise IndexError(f"merge position {j} out of range for {to_text(w)}")
    i = j - 1
    return Composition(w[:i] + (w[i] + w[i + 1],) + w[i + 2:])


def insert(w: Composition, j: int) -> Composition:
    """Place a new entry 2 right after position ``j``; ``j = 0`` prepends."""
    if not 0 <= j <= len(w):
        raise IndexError(f"insert position {j} out of range for {to_text(w)}")
    return Composition(w[:j] + (2,) + w[j:])


def successors(w: Composition, norm_cap: int) -> List[Composition]:
    """One-step images under a merge or an insert, capped in norm."""
    out = {merge(w, j) for j in range(1, len(w))}
    if norm(w) + 2 <= norm_cap:
        out.update(insert(w, j) for j in range(len(w) + 1))
    return sorted_compositions(out)


def predecessors_one_step(w: Composition) -> List[Composition]:
    """All one-step preimages, one per inverse elementary operation.

    Each entry ``v`` splits in ``v - 1`` ordered ways and each entry equal to
    2 may be deleted.  Deletions of neighbouring 2's give equal compositions;
    they are kept as separate items because they are distinct local branches.
    """
    out = []
    for i, v in enumerate(w):
        for a in range(1, v):
            out.append(Composition(w[:i] + (a, v - a) + w[i + 1:]))
        if v == 2:
            out.append(Composition(w[:i] + w[i + 1:]))
    return sorted(out, key=sort_key)


def is_bullet(w: Composition) -> bool:
    """Membership in the set of strings and atoms."""
    q = len(w)
    if q == 1:
        return w[0] % 2 == 0
    if q == 0:
        return False
    return w[0] % 2 == 1 and w[-1] % 2 == 1 and all(v % 2 == 0 for v in w[1:-1])


def gap_sign(w: Composition, i: int) -> int:
    """Sign of the witness polynomial just right of support point ``i``.

    ``i = 0`` is the gap left of all roots and ``i = len(w)`` the gap right
    of them; the sign there is ``(-1) ** (w_{i+1} + ... + w_q)``.
    """
    if not 0 <= i <= len(w):
        raise IndexError(f"gap {i} out of range for {to_text(w)}")
    return -1 if sum(w[i:]) % 2 else 1


@dataclass(frozen=True)
class Block:
    start: int  # 1-based, inclusive
    end: int
    kind: str
    element: Composition

    @property
    def positions(self) -> range:
        return range(self.start, self.end + 1)


@dataclass(frozen=True)
class BlockDecomposition:
    source: Composition
    blocks: Tuple[Block, ...]

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)

    @property
    def elements(self) -> List[Composition]:
        return [b.element for b in self.blocks]

    def block_of(self, position: int) -> int:
        """Index (0-based) of the block holding a support position."""
        for p, b in enumerate(self.blocks):
            if b.start <= position <= b.end:
                return p
        raise IndexError(f"position {position} not in support of {to_text(self.source)}")


def decompose(w: Composition) -> BlockDecomposition:
    """Split ``w`` into its strings and atoms.

    Blocks are the maximal runs of support points joined by gaps where the
    witness polynomial is negative; a single point flanked by positive gaps
    is an atom (and is necessarily even).
    """
    if norm(w) % 2:
        raise ParityError(f"decompose needs an even norm, got {to_text(w)}")
    q = len(w)
    signs = [gap_sign(w, i) for i in range(q + 1)]
    blocks = []
    start = 1
    for pos in range(1, q + 1):
        if signs[pos] > 0:
            kind = ATOM if pos == start else STRING
            blocks.append(Block(start, pos, kind, Composition(w[start - 1:pos])))
            start = pos + 1
    return BlockDecomposition(Composition(w), tuple(blocks))


def from_text(text: str) -> Composition:
    """Parse ``"1,4,1"``; the token ``e`` (or an empty string) is empty."""
    text = text.strip()
    if text in ("e", ""):
        return Composition()
    try:
        return Composition(int(t) for t in text.split(","))
    except ValueError as exc:
        if isinstance(exc, CompositionError):
            raise
        raise CompositionError(f"cannot parse composition {text!r}") from None


def to_text(w: Composition) -> str:
    return ",".join(map(str, w)) if w else "e"
