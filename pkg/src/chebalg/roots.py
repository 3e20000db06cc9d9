"""Sturm sequences over Z[X], real root counting and dyadic isolation.

The chain is p, p', then negated pseudo-remainders. A pseudo-remainder is
``lc(b)**e * (a mod b)``; when ``lc(b) < 0`` and ``e`` is odd that multiplier
is negative, so the remainder is negated back before it enters the chain.
Each element is then divided by its positive content only. Both steps scale
by positive constants, which leave every sign variation unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import EndpointIsRoot, NotSquarefree, ZeroPolynomial
from .poly import IntPoly, content_primitive, derivative, gcd_poly, neg, pseudo_rem, sign_at


@dataclass(frozen=True)
class SturmChain:
    polys: tuple[IntPoly, ...]

    @property
    def head(self) -> IntPoly:
        return self.polys[0]

    def variations(self, x) -> int:
        """Sign changes of the chain at ``x``, zeros skipped."""
        count = 0
        last = 0
        for p in self.polys:
            s = sign_at(p, x)
            if s == 0:
                continue
            if last and s != last:
                count += 1
            last = s
        return count


@dataclass(frozen=True)
class IsolInterval:
    """Interval (lo, hi] holding exactly one root, or the exact root itself."""

    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction] = None

    def __post_init__(self):
        if self.exact is not None:
            if not (self.lo == self.hi == self.exact):
                raise ValueError("an exact interval has lo == hi == exact")
        elif not self.lo < self.hi:
            raise ValueError("lo must be < hi")

    @classmethod
    def point(cls, x) -> IsolInterval:
        x = Fraction(x)
        return cls(x, x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def is_exact(self) -> bool:
        return self.exact is not None


def is_squarefree(p: IntPoly) -> bool:
    if p.is_zero():
        raise ZeroPolynomial("squarefreeness of the zero polynomial")
    if p.degree == 0:
        return True
    return gcd_poly(p, derivative(p)).degree == 0


def sturm_chain(p: IntPoly) -> SturmChain:
    if p.is_zero():
        raise ZeroPolynomial("Sturm chain of the zero polynomial")
    if not is_squarefree(p):
        raise NotSquarefree(f"{p} has a repeated factor")
    chain = [p]
    cur = derivative(p)
    if not cur.is_zero():
        cur = content_primitive(cur)[1]
    prev = p
    while not cur.is_zero():
        chain.append(cur)
        r = pseudo_rem(prev, cur)
        if r.is_zero():
            break
        e = prev.degree - cur.degree + 1
        if cur.lc < 0 and e % 2:
            r = neg(r)
        c, _ = content_primitive(r)
        r = IntPoly(-x // c for x in r.coeffs)
        prev, cur = cur, r
    return SturmChain(tuple(chain))


def count_roots(chain: SturmChain, a, b) -> int:
    """Number of distinct real roots in (a, b]."""
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    for x in (a, b):
        if sign_at(chain.head, x) == 0:
            raise EndpointIsRoot(f"{x} is a root of {chain.head}")
    return chain.variations(a) - chain.variations(b)


def _open_count(chain: SturmChain, lo: Fraction, hi: Fraction) -> int:
    # roots strictly inside (lo, hi); lo or hi may themselves be roots
    n = chain.variations(lo) - chain.variations(hi)
    if sign_at(chain.head, hi) == 0:
        n -= 1
    return n


def _tighten(chain: SturmChain, lo: Fraction, hi: Fraction) -> IsolInterval:
    # one root strictly inside (lo, hi); move root endpoints off the root set
    p = chain.head
    while sign_at(p, lo) == 0 or sign_at(p, hi) == 0:
        m = (lo + hi) / 2
        if sign_at(p, m) == 0:
            return IsolInterval.point(m)
        if _open_count(chain, m, hi) == 1:
            lo = m
        else:
            hi = m
    return IsolInterval(lo, hi)


def isolate_roots(p: IntPoly, a, b) -> list[IsolInterval]:
    """Sorted, disjoint isolating intervals for the roots of ``p`` in (a, b).

    Bisection is driven by Sturm counts; a midpoint that is an exact root is
    returned as a point interval. Returned (lo, hi) endpoints are never roots.
    """
    a, b = Fraction(a), Fraction(b)
    chain = sturm_chain(p)
    total = count_roots(chain, a, b)
    out: list[IsolInterval] = []
    stack = [(a, b, total)]
    while stack:
        lo, hi, c = stack.pop()
        if c == 0:
            continue
        m = (lo + hi) / 2
        if sign_at(p, m) == 0:
            out.append(IsolInterval.point(m))
            stack.append((lo, m, _open_count(chain, lo, m)))
            stack.append((m, hi, _open_count(chain, m, hi)))
        elif c == 1:
            out.append(_tighten(chain, lo, hi))
        else:
            left = _open_count(chain, lo, m)
            stack.append((lo, m, left))
            stack.append((m, hi, c - left))
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    return out


def refine(p: IntPoly, iv: IsolInterval, width) -> IsolInterval:
    """Bisect ``iv`` until ``hi - lo <= width`` or a midpoint hits the root."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if iv.is_exact():
        return iv
    lo, hi = iv.lo, iv.hi
    s_lo, s_hi = sign_at(p, lo), sign_at(p, hi)
    if s_lo == 0 or s_hi == 0 or s_lo == s_hi:
        raise ValueError(f"{iv} does not bracket a simple root of {p}")
    while hi - lo > width:
        m = (lo + hi) / 2
        s = sign_at(p, m)
        if s == 0:
            return IsolInterval.point(m)
        if s == s_lo:
            lo = m
        else:
            hi = m
    return IsolInterval(lo, hi)
