"""Dense univariate polynomials over the rationals.

Only what square-free decomposition, Sturm sequences and divisor expansion
need.  Coefficients are stored ascending (index 0 is the constant term) as
:class:`fractions.Fraction` with trailing zeros trimmed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

Number = Union[int, Fraction, str]


def _frac(x: Number) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Number) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Sequence[Number]) -> "Poly":
        p = cls([1])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self or not other:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = _lift(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        inv = 1 / other.lc
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            if c:
                quot[k - dq] = c
                for i, b in enumerate(other.coeffs):
                    rem[k - dq + i] -= c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: Number) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Poly":
        return Poly(c / self.lc for c in self.coeffs) if self else self

    def shift(self, c: Number) -> "Poly":
        """``p(x + c)``."""
        out = Poly()
        lin = Poly([_frac(c), 1])
        for coef in reversed(self.coeffs):
            out = out * lin + Poly([coef])
        return out

    def to_strings(self) -> List[str]:
        return [str(c) for c in self.coeffs]


def _lift(x) -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero if both are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def parse_coeffs(text: str) -> Poly:
    """``"-2,5,-4,1"`` (ascending, rationals like ``1/3`` allowed)."""
    parts = [t.strip() for t in text.split(",")]
    if not parts or any(not t for t in parts):
        raise ValueError(f"cannot parse coefficient list {text!r}")
    return Poly(Fraction(t) for t in parts)
