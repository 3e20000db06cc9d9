"""Dense univariate polynomials over the integers.

Coefficients are stored in ascending degree order (``coeffs[k]`` multiplies
``X**k``) as Python ints, so there is no size limit. The zero polynomial is
the empty tuple and its degree is ``None``.

Multiplication is schoolbook O(n*m). Chebyshev polynomials are about half
dense and the degrees handled here stay in the low hundreds, so FFT or
Karatsuba would not pay for themselves.

Rationals are :class:`fractions.Fraction`, which is already canonical
(reduced, positive denominator, zero is 0/1).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .errors import BothZero, NotDivisible, ZeroPolynomial

Rat = Fraction
RatLike = Union[int, Fraction]


class IntPoly:
    """Immutable polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = []
        for x in coeffs:
            if isinstance(x, bool) or not isinstance(x, int):
                raise TypeError(f"integer coefficient expected, got {x!r}")
            c.append(x)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        """Coefficient of ``X**k``; zero beyond the degree."""
        if k < 0:
            raise IndexError(k)
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.coeffs == IntPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "X" if k == 1 else f"X^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> IntPoly:
        return neg(self)

    def __add__(self, other) -> IntPoly:
        other = _coerce(other)
        return NotImplemented if other is None else add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        other = _coerce(other)
        return NotImplemented if other is None else sub(self, other)

    def __rsub__(self, other) -> IntPoly:
        other = _coerce(other)
        return NotImplemented if other is None else sub(other, self)

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int) and not isinstance(other, bool):
            return scale(self, other)
        if isinstance(other, IntPoly):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, x: RatLike) -> Fraction:
        return eval_rat(self, x)


def _coerce(x) -> IntPoly | None:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return IntPoly((x,))
    return None


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    return IntPoly(tuple(x + b[i] if i < len(b) else x for i, x in enumerate(a)))


def neg(p: IntPoly) -> IntPoly:
    return IntPoly(-c for c in p.coeffs)


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return add(p, neg(q))


def scale(p: IntPoly, c: int) -> IntPoly:
    if c == 0:
        return ZERO
    return IntPoly(c * x for x in p.coeffs)


def shift(p: IntPoly, k: int) -> IntPoly:
    """Multiply by ``X**k``."""
    if not p.coeffs:
        return ZERO
    return IntPoly((0,) * k + p.coeffs)


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return IntPoly(out)


def derivative(p: IntPoly) -> IntPoly:
    return IntPoly(k * c for k, c in enumerate(p.coeffs) if k > 0)


def compose(p: IntPoly, q: IntPoly) -> IntPoly:
    """Return ``p(q(X))`` by Horner accumulation over the coefficients of p."""
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = add(mul(acc, q), IntPoly((c,)))
    return acc


def _homogeneous(p: IntPoly, x: RatLike) -> tuple[int, int]:
    # sum_k c_k num^k den^(deg-k), together with den^deg
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    coeffs = p.coeffs
    if not coeffs:
        return 0, 1
    acc = coeffs[-1]
    dpow = 1
    for c in reversed(coeffs[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return acc, dpow


def eval_rat(p: IntPoly, x: RatLike) -> Fraction:
    """Exact value of ``p`` at the rational ``x``, normalized once at the end."""
    top, bottom = _homogeneous(p, x)
    return Fraction(top, bottom)


def sign_at(p: IntPoly, x: RatLike) -> int:
    """Sign (-1, 0 or 1) of ``p(x)`` without building the reduced fraction."""
    top, _ = _homogeneous(p, x)
    return (top > 0) - (top < 0)


def exact_div(p: IntPoly, q: IntPoly) -> IntPoly:
    """Quotient ``s`` with ``p == q * s``; raises NotDivisible otherwise."""
    if not q.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    db = len(q.coeffs) - 1
    lb = q.coeffs[-1]
    if len(rem) - 1 < db:
        if rem:
            raise NotDivisible(f"{p} is not divisible by {q}")
        return ZERO
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        t, r = divmod(c, lb)
        if r:
            raise NotDivisible(f"{p} is not divisible by {q} over the integers")
        quot[k - db] = t
        for i, y in enumerate(q.coeffs):
            rem[k - db + i] -= t * y
    if any(rem):
        raise NotDivisible(f"{p} is not divisible by {q}")
    return IntPoly(quot)


def content_primitive(p: IntPoly) -> tuple[int, IntPoly]:
    """Split ``p`` as ``c * q`` with ``c > 0`` and ``q`` primitive.

    The primitive part keeps the sign of ``p``'s leading coefficient.
    """
    if not p.coeffs:
        raise ZeroPolynomial("content of the zero polynomial is undefined")
    c = math.gcd(*p.coeffs)
    return c, IntPoly(x // c for x in p.coeffs)


def primitive_part(p: IntPoly) -> IntPoly:
    return content_primitive(p)[1]


def positive_primitive(p: IntPoly) -> IntPoly:
    """Primitive part scaled by -1 if needed so the leading coefficient is positive."""
    q = primitive_part(p)
    return neg(q) if q.lc < 0 else q


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder ``lc(b)**(deg a - deg b + 1) * a mod b``.

    The exponent is always the full ``deg a - deg b + 1`` so that callers
    can predict the sign of the multiplier.
    """
    if not b.coeffs:
        raise ZeroDivisionError("pseudo-remainder by the zero polynomial")
    db = len(b.coeffs) - 1
    da = len(a.coeffs) - 1
    if da < db:
        return a
    lb = b.coeffs[-1]
    r = list(a.coeffs)
    steps = da - db + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        j = len(r) - 1 - db
        r = [lb * x for x in r]
        for i, y in enumerate(b.coeffs):
            r[j + i] -= lr * y
        while r and r[-1] == 0:
            r.pop()
        steps -= 1
    if steps:
        m = lb ** steps
        r = [m * x for x in r]
    return IntPoly(r)


def gcd_poly(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient.

    Runs a primitive pseudo-remainder sequence. A degree-0 result (the
    constant 1) means ``p`` and ``q`` are coprime over Q.
    """
    if not p.coeffs and not q.coeffs:
        raise BothZero("gcd of two zero polynomials is undefined")
    if not q.coeffs:
        return positive_primitive(p)
    if not p.coeffs:
        return positive_primitive(q)
    a, b = primitive_part(p), primitive_part(q)
    if a.degree < b.degree:
        a, b = b, a
    while b.coeffs:
        r = pseudo_rem(a, b)
        a, b = b, (primitive_part(r) if r.coeffs else ZERO)
    return positive_primitive(a)
