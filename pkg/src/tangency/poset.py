"""Degeneration orders on compositions and on strings/atoms.

``geq(a, b)`` holds when ``b`` is reachable from ``a`` by merges and inserts.
It is decided through morphisms: weakly monotone maps from the support of
``a`` onto the support of ``b`` in which every target receives a contiguous
(possibly empty) run of source entries.  A run must not exceed its target
and must match it in parity; an empty run therefore needs an even target.

Dropping the parity conditions gives the looser morphisms used for strings
and atoms (:func:`bullet_mor_enumerate`).  That looser test is *not*
equivalent to the string/atom order itself: it ignores the parity of the
targets missed on either side.  :func:`bullet_geq` decides the order exactly
and :func:`bullet_geq_oracle` decides it by brute force.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import accumulate
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .composition import (
    Composition,
    decompose,
    is_bullet,
    norm,
    reduced_norm,
    sort_key,
    successors,
    to_text,
)
from .errors import DomainError

OMEGA = "omega"
BULLET = "bullet"
EXACT = "exact"
UPTO = "upto"


@dataclass(frozen=True)
class Morphism:
    source: Composition
    target: Composition
    map: Tuple[int, ...]  # 1-based target position for each source position
    parity: Tuple[bool, ...]  # per target: run sum has the target's parity

    def preimage_sums(self) -> List[int]:
        sums = [0] * len(self.target)
        for i, t in enumerate(self.map):
            sums[t - 1] += self.source[i]
        return sums


def _runs(w1: Composition, w2: Composition, strict: bool) -> Iterator[Tuple[int, ...]]:
    """Yield run lengths (one per target) of every admissible morphism."""
    q1, q2 = len(w1), len(w2)
    prefix = [0, *accumulate(w1)]

    @lru_cache(maxsize=None)
    def feasible(s: int, t: int) -> bool:
        if t == q2:
            return s == q1
        return any(True for _ in step(s, t))

    def step(s: int, t: int):
        for end in range(s, q1 + 1):
            total = prefix[end] - prefix[s]
            if total > w2[t]:
                break
            if strict and (w2[t] - total) % 2:
                continue
            if feasible(end, t + 1) if t + 1 < q2 else end == q1:
                yield end

    def walk(s: int, t: int, acc: Tuple[int, ...]):
        if t == q2:
            yield acc
            return
        for end in step(s, t):
            yield from walk(end, t + 1, acc + (end - s,))

    if q2 == 0:
        if q1 == 0:
            yield ()
        return
    yield from walk(0, 0, ())


def _to_morphism(w1, w2, runs) -> Morphism:
    mapping = []
    for t, length in enumerate(runs):
        mapping.extend([t + 1] * length)
    m = Morphism(Composition(w1), Composition(w2), tuple(mapping), ())
    sums = m.preimage_sums()
    return Morphism(m.source, m.target, m.map, tuple((s - v) % 2 == 0 for s, v in zip(sums, w2)))


def mor_enumerate(w1: Composition, w2: Composition) -> List[Morphism]:
    """All morphisms ``w1 -> w2``, in lexicographic order of their maps."""
    return sorted((_to_morphism(w1, w2, r) for r in _runs(w1, w2, strict=True)), key=lambda m: m.map)


def mor_exists(w1: Composition, w2: Composition) -> bool:
    return next(_runs(w1, w2, strict=True), None) is not None


def geq(w1: Composition, w2: Composition) -> bool:
    """``w1`` degenerates to ``w2`` (reflexive)."""
    if norm(w1) > norm(w2) or (norm(w2) - norm(w1)) % 2:
        return False
    return mor_exists(w1, w2)


def witness(w1: Composition, w2: Composition) -> Optional[Morphism]:
    for r in _runs(w1, w2, strict=True):
        return _to_morphism(w1, w2, r)
    return None


def reachable_bfs(w1: Composition, w2: Composition) -> bool:
    """Search merge/insert sequences from ``w1`` for ``w2``; exponential."""
    w1, w2 = Composition(w1), Composition(w2)
    cap = norm(w2)
    seen = {w1}
    queue = deque([w1])
    while queue:
        w = queue.popleft()
        if w == w2:
            return True
        for nxt in successors(w, cap):
            if nxt not in seen and reduced_norm(nxt) <= reduced_norm(w2):
                seen.add(nxt)
                queue.append(nxt)
    return False


def _require_bullets(*ws):
    for w in ws:
        if not is_bullet(w):
            raise DomainError(f"{to_text(w)} is neither a string nor an atom")


def bullet_mor_enumerate(w1: Composition, w2: Composition) -> List[Morphism]:
    """Monotone maps with run sums bounded by their targets; no parity."""
    _require_bullets(w1, w2)
    return sorted((_to_morphism(w1, w2, r) for r in _runs(w1, w2, strict=False)), key=lambda m: m.map)


def bullet_mor_exists(w1: Composition, w2: Composition) -> bool:
    _require_bullets(w1, w2)
    return next(_runs(w1, w2, strict=False), None) is not None


def bullet_geq(w1: Composition, w2: Composition) -> bool:
    """Exact test of the string/atom order.

    ``w1`` is above ``w2`` iff ``w1`` sits as a string or atom inside some
    ``L + w1 + R`` that degenerates to ``w2``.  The padding ``L``/``R`` must
    have even norm and is otherwise free, so it can absorb any odd targets
    outside the image of ``w1``; only the targets where ``w1`` lands carry
    constraints.  Let ``a`` and ``b`` be the first and last of them:

    * ``a < t < b`` behave as for ordinary morphisms (bound and parity);
    * target ``a`` must have ``run <= w2[a]`` and ``run`` congruent to the
      prefix sum of ``w2`` through ``a`` (the rest comes from ``L``);
      target ``b`` mirrors this with the suffix sum;
    * when ``a == b`` the whole of ``w1`` plus the minimal odd padding on
      each side must fit under ``w2[a]``.
    """
    _require_bullets(w1, w2)
    q1, q2 = len(w1), len(w2)
    prefix1 = [0, *accumulate(w1)]
    prefix2 = [0, *accumulate(w2)]
    total2 = prefix2[-1]

    @lru_cache(maxsize=None)
    def go(s: int, t: int) -> bool:
        if s == q1:
            return True
        if t == q2:
            return False
        cap = w2[t]
        before = prefix2[t] % 2
        after = (total2 - prefix2[t + 1]) % 2
        if s == 0 and go(0, t + 1):
            return True
        lo = 1 if s == 0 else 0
        for end in range(s + lo, q1 + 1):
            run = prefix1[end] - prefix1[s]
            if run > cap:
                break
            if s == 0 and end == q1:
                ok = run + before + after <= cap
            elif s == 0:
                ok = (prefix2[t + 1] - run) % 2 == 0
            elif end == q1:
                ok = end > s and (total2 - prefix2[t] - run) % 2 == 0
            else:
                ok = (cap - run) % 2 == 0
            if ok and go(end, t + 1):
                return True
        return False

    return go(0, 0)


def bullet_geq_oracle(w1: Composition, w2: Composition) -> bool:
    """Brute force: is ``w1`` a block of some ``w`` with ``geq(w, w2)``?"""
    _require_bullets(w1, w2)
    w1 = Composition(w1)
    for w in generate_omega(norm(w2), UPTO):
        if len(w) >= len(w1) and geq(w, w2) and w1 in decompose(w).elements:
            return True
    return False


def _compositions_of(n: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions_of(n - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _omega_cached(d: int, mode: str) -> Tuple[Composition, ...]:
    norms = [d] if mode == EXACT else range(d % 2, d + 1, 2)
    out = [Composition(c) for n in norms for c in _compositions_of(n)]
    return tuple(sorted(out, key=sort_key))


def generate_omega(d: int, mode: str = UPTO) -> List[Composition]:
    """Compositions of norm ``d`` (EXACT) or of norm ``<= d`` and ``= d`` mod 2."""
    if d < 0:
        raise DomainError(f"degree must be non-negative, got {d}")
    if mode not in (EXACT, UPTO):
        raise DomainError(f"unknown mode {mode!r}")
    return list(_omega_cached(d, mode))


@lru_cache(maxsize=None)
def _bullet_cached(n: int) -> Tuple[Composition, ...]:
    out = []
    for total in range(2, 2 * n + 3, 2):
        for c in _compositions_of(total):
            w = Composition(c)
            if is_bullet(w) and reduced_norm(w) <= n:
                out.append(w)
    return tuple(sorted(out, key=lambda w: (reduced_norm(w), sort_key(w))))


def generate_bullet(n: int) -> List[Composition]:
    """Strings and atoms of reduced norm at most ``n``, graded order."""
    if n < 0:
        raise DomainError(f"bound must be non-negative, got {n}")
    return list(_bullet_cached(n))


@dataclass
class FinitePoset:
    elements: List[Composition]
    kind: str
    covers: List[Tuple[int, int]] = field(default_factory=list)

    def index(self, w: Composition) -> int:
        return self.elements.index(Composition(w))

    def relation(self, a: Composition, b: Composition) -> bool:
        return order_test(self.kind)(a, b)

    def above(self, w: Composition) -> List[Composition]:
        """Elements ``x`` with ``x >= w``."""
        test = order_test(self.kind)
        return [x for x in self.elements if test(x, w)]

    def below(self, w: Composition) -> List[Composition]:
        test = order_test(self.kind)
        return [x for x in self.elements if test(w, x)]

    def covers_of(self, w: Composition) -> List[Composition]:
        i = self.index(w)
        return [self.elements[j] for a, j in self.covers if a == i]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "elements": [list(w) for w in self.elements],
            "covers": [list(c) for c in self.covers],
        }


def order_test(kind: str):
    if kind == OMEGA:
        return geq
    if kind == BULLET:
        return bullet_geq
    raise DomainError(f"unknown poset kind {kind!r}")


def hasse(elements: Sequence[Composition], kind: str = OMEGA) -> FinitePoset:
    """Cover relations (bigger index, smaller index) of the induced order."""
    test = order_test(kind)
    elems = [Composition(w) for w in elements]
    n = len(elems)
    down: Dict[int, set] = {
        i: {j for j in range(n) if j != i and test(elems[i], elems[j])} for i in range(n)
    }
    covers = []
    for i in range(n):
        indirect = set()
        for j in down[i]:
            indirect |= down[j]
        covers.extend((i, j) for j in sorted(down[i] - indirect))
    return FinitePoset(elems, kind, covers)


def pred_at_distance(w: Composition, k: int, universe: Sequence[Composition]) -> List[Composition]:
    """Elements of ``universe`` that reach ``w`` in exactly ``k`` steps."""
    if k < 0:
        raise DomainError("distance must be non-negative")
    target = reduced_norm(w) - k
    return sorted(
        {Composition(x) for x in universe if reduced_norm(x) == target and geq(x, w)},
        key=sort_key,
    )
