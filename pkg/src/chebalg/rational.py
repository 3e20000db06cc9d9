"""Rational roots of integer polynomials and the Chebyshev classification.

Two independent routes find the rational roots of a Chebyshev polynomial:
the ordinary candidate search on the polynomial itself, and an integer
search on its monic rescaling whose roots are then scaled back. Both are
compared with the closed-form answer from :func:`expected_rational_roots`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chebyshev import ChebKind, gen_recurrence, monic_scale, monic_transform
from .errors import ZeroPolynomial
from .poly import IntPoly, eval_rat

HALF = Fraction(1, 2)


def _factorize(n: int) -> dict[int, int]:
    # trial division; stops as soon as the cofactor is 1 or prime
    n = abs(n)
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n != 0``, ascending."""
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    divs = [1]
    for prime, mult in _factorize(n).items():
        divs = [d * prime ** e for d in divs for e in range(mult + 1)]
    return sorted(divs)


def rational_roots_generic(p: IntPoly) -> frozenset[Fraction]:
    """All rational roots of ``p``, by the rational root theorem."""
    if p.is_zero():
        raise ZeroPolynomial("every rational is a root of the zero polynomial")
    coeffs = p.coeffs
    v = 0
    while coeffs[v] == 0:
        v += 1
    roots = {Fraction(0)} if v else set()
    q = IntPoly(coeffs[v:])
    if q.degree == 0:
        return frozenset(roots)
    const, lead = q.coeffs[0], q.lc
    # a root s/t in lowest terms makes (t - s) divide q(1) and (t + s) divide q(-1)
    at_one = eval_rat(q, 1).numerator
    at_minus_one = eval_rat(q, -1).numerator
    for t in divisors(lead):
        for s_abs in divisors(const):
            if math.gcd(s_abs, t) != 1:
                continue
            for s in (s_abs, -s_abs):
                if at_one and (t - s == 0 or at_one % (t - s)):
                    continue
                if at_minus_one and (t + s == 0 or at_minus_one % (t + s)):
                    continue
                x = Fraction(s, t)
                if eval_rat(q, x) == 0:
                    roots.add(x)
    return frozenset(roots)


def expected_rational_roots(kind: ChebKind, n: int) -> frozenset[Fraction]:
    if n < 1:
        raise ValueError("n must be >= 1")
    odd = n % 2 == 1
    if kind is ChebKind.FIRST:
        return frozenset({Fraction(0)} if odd else ())
    if kind is ChebKind.SECOND:
        out = {Fraction(0)} if odd else set()
        if n % 3 == 2:
            out |= {-HALF, HALF}
        return frozenset(out)
    # T*_n(1/2) = T_n(0), zero exactly for odd n
    return frozenset({HALF} if odd else ())


def rational_roots_monic(kind: ChebKind, n: int) -> frozenset[Fraction]:
    """Roots found as integers of the monic rescaling, mapped back."""
    m = monic_transform(kind, n)
    scale = monic_scale(kind)
    found = rational_roots_generic(m)
    if any(x.denominator != 1 for x in found):
        raise ArithmeticError(f"monic polynomial {m} has a non-integer rational root")
    return frozenset(x / scale for x in found)


@dataclass(frozen=True)
class RationalRootReport:
    kind: ChebKind
    n: int
    computed: frozenset
    expected: frozenset
    computed_monic: frozenset
    agrees: bool


def cross_check(kind: ChebKind, n: int) -> RationalRootReport:
    raw = rational_roots_generic(gen_recurrence(kind, n))
    via_monic = rational_roots_monic(kind, n)
    expected = expected_rational_roots(kind, n)
    return RationalRootReport(kind, n, raw, expected, via_monic,
                              raw == expected and via_monic == raw)
