"""Exact real-root patterns of rational polynomials.

``classify`` returns the multiplicities of the distinct real roots in
ascending order.  Everything is exact: square-free parts come from Yun's
algorithm, roots are isolated with Sturm sequences and bisection, and a root
that turns out to be rational is reported as a point.
"""

from __future__ import annotations

import ast
import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

from .composition import Composition, decompose, reduced_norm
from .errors import (
    NotSquarefreeError,
    OrderError,
    UnboundedNegativeError,
    ZeroPolynomialError,
)
from .poset import geq
from .polynomial import Number, Poly, gcd

REFINE_STEPS = 40


def _nonzero(p: Poly):
    if not p:
        raise ZeroPolynomialError("the zero polynomial has no root pattern")


def squarefree_decomposition(p: Poly) -> List[Tuple[Poly, int]]:
    """Yun: ``p = lc * prod f_i ** i`` with monic, coprime, square-free ``f_i``."""
    _nonzero(p)
    if p.degree < 1:
        return []
    dp = p.derivative()
    a = gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        b = b // a
        c = d // a
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a.monic(), i))
        i += 1
    return out


def sturm_sequence(p: Poly) -> List[Poly]:
    seq = [p, p.derivative()]
    while seq[-1]:
        r = -(seq[-2] % seq[-1])
        if not r:
            break
        seq.append(r)
    return [s for s in seq if s]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for u, v in zip(nz, nz[1:]) if u != v)


def sign_variations(seq: Sequence[Poly], x) -> int:
    if x == math.inf:
        return _variations([_sign(s.lc) for s in seq])
    if x == -math.inf:
        return _variations([_sign(s.lc) * (-1) ** s.degree for s in seq])
    return _variations([_sign(s(x)) for s in seq])


def count_roots(seq: Sequence[Poly], a, b) -> int:
    """Distinct real roots in ``(a, b]`` of the first polynomial of ``seq``."""
    return sign_variations(seq, a) - sign_variations(seq, b)


def cauchy_bound(p: Poly) -> Fraction:
    return 1 + max(abs(c / p.lc) for c in p.coeffs[:-1]) if p.degree > 0 else Fraction(1)


def simplest_between(x: Fraction, y: Fraction) -> Fraction:
    """The rational with the smallest denominator in ``[x, y]``."""
    c = math.ceil(x)
    if c <= y:
        return Fraction(c)
    n = math.floor(x)
    return n + 1 / simplest_between(1 / (y - n), 1 / (x - n))


@dataclass(frozen=True)
class IsolatedRoot:
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def to_dict(self) -> dict:
        if self.is_point:
            return {"point": str(self.lo), "multiplicity": self.multiplicity}
        return {"interval": [str(self.lo), str(self.hi)], "multiplicity": self.multiplicity}


def _refine(q: Poly, seq, a: Fraction, b: Fraction) -> IsolatedRoot:
    """Shrink ``(a, b]`` around its single root; snap to it if rational."""
    if q(b) == 0:
        return IsolatedRoot(b, b)
    for _ in range(REFINE_STEPS):
        s = simplest_between(a, b)
        if s != a and q(s) == 0:
            return IsolatedRoot(s, s)
        m = (a + b) / 2
        if q(m) == 0:
            return IsolatedRoot(m, m)
        if count_roots(seq, a, m):
            b = m
        else:
            a = m
    return IsolatedRoot(a, b)


def isolate_real_roots(q: Poly) -> List[IsolatedRoot]:
    """Disjoint ordered isolating intervals for a square-free ``q``.

    Interval roots satisfy ``lo < root < hi`` and ``q(hi) != 0``.
    """
    _nonzero(q)
    if q.degree < 1:
        return []
    if gcd(q, q.derivative()).degree > 0:
        raise NotSquarefreeError("root isolation needs a square-free polynomial")
    seq = sturm_sequence(q)
    bound = cauchy_bound(q)
    todo = [(-bound, bound)]
    found = []
    while todo:
        a, b = todo.pop()
        n = count_roots(seq, a, b)
        if n == 0:
            continue
        if n == 1:
            found.append(_refine(q, seq, a, b))
            continue
        m = (a + b) / 2
        todo.append((a, m))
        todo.append((m, b))
    return sorted(found, key=lambda r: r.lo)


def real_roots(p: Poly) -> List[IsolatedRoot]:
    """Distinct real roots of ``p`` with multiplicities, ascending."""
    _nonzero(p)
    factors = squarefree_decomposition(p)
    if not factors:
        return []
    part = Poly([1])
    for f, _ in factors:
        part = part * f
    seqs = [(sturm_sequence(f), f, m) for f, m in factors]
    out = []
    for r in isolate_real_roots(part):
        for seq, f, m in seqs:
            if (f(r.lo) == 0) if r.is_point else count_roots(seq, r.lo, r.hi) == 1:
                out.append(IsolatedRoot(r.lo, r.hi, m))
                break
    return out


def classify(p: Poly) -> Composition:
    return Composition(r.multiplicity for r in real_roots(p))


def _separator(p: Poly, left: IsolatedRoot, right: IsolatedRoot) -> Fraction:
    """A rational strictly between two consecutive distinct roots."""
    if not left.is_point:
        return left.hi
    if right.is_point:
        return (left.lo + right.lo) / 2
    if right.lo > left.lo:
        return right.lo
    q = p // gcd(p, p.derivative())
    seq = sturm_sequence(q)
    a, b = right.lo, right.hi
    while True:
        m = (a + b) / 2
        if q(m) == 0:
            return (left.lo + m) / 2
        if count_roots(seq, m, b) == 1:
            return m
        b = m


@dataclass(frozen=True)
class NegativityComponent:
    start: IsolatedRoot
    end: IsolatedRoot
    type: Composition
    marker_root_index: int  # 1-based among all distinct real roots

    def to_dict(self) -> dict:
        return {
            "start": self.start.to_dict(),
            "end": self.end.to_dict(),
            "type": list(self.type),
            "marker_root_index": self.marker_root_index,
        }


def negativity_components(p: Poly) -> List[NegativityComponent]:
    """Connected pieces of ``{p <= 0}``, each typed by its root multiplicities."""
    _nonzero(p)
    if p.degree % 2 or p.lc < 0:
        raise UnboundedNegativeError("p <= 0 is unbounded unless the degree is even and p is eventually positive")
    roots = real_roots(p)
    after = [_sign(p(_separator(p, r, s))) for r, s in zip(roots, roots[1:])] + [1]
    out = []
    start = 0
    for i, r in enumerate(roots):
        if after[i] > 0:
            block = roots[start : i + 1]
            out.append(
                NegativityComponent(block[0], block[-1], Composition(x.multiplicity for x in block), start + 1)
            )
            start = i + 1
    return out


def expand_from_divisor(
    real: Sequence[Tuple[Number, int]],
    pairs: Sequence[Tuple[Number, Number, int]] = (),
) -> Poly:
    """Monic polynomial with the given real roots and conjugate pairs ``re +- i im``."""
    p = Poly([1])
    prev = None
    for r, m in real:
        r = Fraction(r)
        if prev is not None and r <= prev:
            raise OrderError("real roots must be strictly ascending")
        if m < 1:
            raise ValueError("multiplicities must be positive")
        prev = r
        p = p * Poly([-r, 1]) ** m
    for re, im, m in pairs:
        re, im = Fraction(re), Fraction(im)
        if im <= 0:
            raise ValueError("imaginary parts must be positive")
        if m < 1:
            raise ValueError("multiplicities must be positive")
        p = p * Poly([re * re + im * im, -2 * re, 1]) ** m
    return p


@dataclass
class FamilyReport:
    rows: List[Tuple[Fraction, Composition]]
    transitions: List[dict] = field(default_factory=list)

    @property
    def issues(self) -> List[dict]:
        return [t for t in self.transitions if not t["ok"]]

    @property
    def ok(self) -> bool:
        return not self.issues

    def to_dict(self) -> dict:
        return {
            "rows": [{"t": str(t), "type": list(w)} for t, w in self.rows],
            "transitions": [
                {**t, "from": list(t["from"]), "to": list(t["to"])} for t in self.transitions
            ],
            "ok": self.ok,
        }


def classify_family(family: Callable[[Fraction], Poly], samples: Sequence[Number]) -> FamilyReport:
    """Classify ``family(t)`` along ``samples``, ordered toward the degenerate end.

    Every change of type between neighbouring samples must be a degeneration
    that strictly raises the reduced norm.
    """
    if not samples:
        raise ValueError("at least one sample is needed")
    rows = [(Fraction(t), classify(family(Fraction(t)))) for t in samples]
    report = FamilyReport(rows)
    for (t0, a), (t1, b) in zip(rows, rows[1:]):
        if a == b:
            continue
        degenerates = geq(a, b)
        raises = reduced_norm(b) > reduced_norm(a)
        report.transitions.append(
            {"t_from": str(t0), "t_to": str(t1), "from": a, "to": b,
             "geq": degenerates, "reduced_norm_up": raises, "ok": degenerates and raises}
        )
    return report


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


def parse_t_expression(text: str) -> Callable[[Fraction], Fraction]:
    """Compile an arithmetic expression in ``t`` (``+ - * / **``, rationals)."""
    tree = ast.parse(text.strip(), mode="eval")

    def ev(node, t):
        if isinstance(node, ast.Expression):
            return ev(node.body, t)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return Fraction(node.value)
        if isinstance(node, ast.Name) and node.id == "t":
            return t
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand, t)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left, t), ev(node.right, t))
        if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
            e = ev(node.right, t)
            if e.denominator != 1 or e < 0:
                raise ValueError("only non-negative integer powers are allowed")
            return ev(node.left, t) ** int(e)
        raise ValueError(f"unsupported expression in {text!r}")

    try:
        ev(tree, Fraction(1, 3))  # reject bad syntax early
    except ZeroDivisionError:
        pass
    return lambda t: ev(tree, Fraction(t))


def family_from_expressions(exprs: Sequence[str]) -> Callable[[Fraction], Poly]:
    """Ascending coefficients, each an expression in ``t``."""
    fs = [parse_t_expression(e) for e in exprs]
    return lambda t: Poly(f(t) for f in fs)


def negativity_matches_blocks(p: Poly) -> bool:
    """Cross-check: component types equal the string/atom blocks of the pattern."""
    w = classify(p)
    comps = negativity_components(p)
    blocks = decompose(w)
    return [c.type for c in comps] == blocks.elements and [c.marker_root_index for c in comps] == [
        b.start for b in blocks
    ]
