"""Chebyshev polynomials T_n, U_n and the shifted T*_n over the integers.

Two independent generators are provided: the three-term recurrence and the
explicit coefficient formulas. Both are integer-only.
"""

from __future__ import annotations

import enum
import threading
from fractions import Fraction

from .errors import NonIntegralCoefficient, UnsupportedKind
from .poly import ONE, X, IntPoly, compose, derivative, eval_rat, exact_div, mul, sub


class ChebKind(enum.Enum):
    FIRST = "T"
    SECOND = "U"
    SHIFTED_FIRST = "Tstar"

    @classmethod
    def parse(cls, s: str) -> ChebKind:
        for k in cls:
            if s == k.value or s.upper() == k.name:
                return k
        if s in ("T*", "t*", "tstar"):
            return cls.SHIFTED_FIRST
        raise ValueError(f"unknown Chebyshev kind {s!r} (expected T, U or Tstar)")


SHIFT = IntPoly((-1, 2))  # 2X - 1
_TWO_X = IntPoly((0, 2))


class _Ladder:
    """Thread-safe memo of P_0..P_n for one recurrence family."""

    def __init__(self, seeds: tuple[IntPoly, IntPoly]) -> None:
        self._polys = list(seeds)
        self._lock = threading.Lock()

    def upto(self, n: int) -> tuple[IntPoly, ...]:
        polys = self._polys
        if n < len(polys):
            return tuple(polys[: n + 1])
        with self._lock:
            while len(polys) <= n:
                polys.append(sub(mul(_TWO_X, polys[-1]), polys[-2]))
            return tuple(polys[: n + 1])


_LADDERS = {
    ChebKind.FIRST: _Ladder((ONE, X)),
    ChebKind.SECOND: _Ladder((ONE, _TWO_X)),
}
_shifted_cache: dict[int, IntPoly] = {}
_shifted_lock = threading.Lock()


def ladder(kind: ChebKind, n: int) -> tuple[IntPoly, ...]:
    """All of P_0, ..., P_n for ``kind``, sharing the module cache."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind is ChebKind.SHIFTED_FIRST:
        return tuple(gen_recurrence(kind, k) for k in range(n + 1))
    return _LADDERS[kind].upto(n)


def gen_recurrence(kind: ChebKind, n: int) -> IntPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind is ChebKind.SHIFTED_FIRST:
        p = _shifted_cache.get(n)
        if p is None:
            p = compose(_LADDERS[ChebKind.FIRST].upto(n)[n], SHIFT)
            with _shifted_lock:
                _shifted_cache[n] = p
        return p
    return _LADDERS[kind].upto(n)[n]


def binomial(n: int, k: int) -> int:
    """C(n, k) by a running product; each partial quotient is exact."""
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    c = 1
    for i in range(1, k + 1):
        c = c * (n - k + i) // i
    return c


def _t_weight(n: int, k: int) -> int:
    # n/(n-k) * C(n-k, k), kept integral
    return binomial(n - k, k) + binomial(n - k - 1, k - 1)


def gen_closed_form(kind: ChebKind, n: int) -> IntPoly:
    """T_n or U_n from the explicit sum over k of terms in X^(n-2k)."""
    if kind is ChebKind.SHIFTED_FIRST:
        raise UnsupportedKind("no explicit coefficient formula for the shifted kind")
    if n < 1:
        raise ValueError("closed form requires n >= 1")
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        sign = -1 if k % 2 else 1
        if kind is ChebKind.FIRST:
            # (n/(n-k)) C(n-k,k) 2^(n-2k-1); the weight is even when n == 2k
            w = _t_weight(n, k) << (n - 2 * k)
            if w & 1:
                raise NonIntegralCoefficient(f"T_{n}: odd weight at k={k}")
            coeffs[n - 2 * k] = sign * (w >> 1)
        else:
            coeffs[n - 2 * k] = sign * (binomial(n - k, k) << (n - 2 * k))
    return IntPoly(coeffs)


def _rescale(p: IntPoly, factor: int, base: int) -> IntPoly:
    # factor * p(X / base), with every coefficient checked for integrality
    out = []
    for j, c in enumerate(p.coeffs):
        q, r = divmod(factor * c, base ** j)
        if r:
            raise NonIntegralCoefficient(
                f"coefficient of X^{j} is {Fraction(factor * c, base ** j)}")
        out.append(q)
    return IntPoly(out)


def monic_transform(kind: ChebKind, n: int) -> IntPoly:
    """Monic integer rescaling: 2 T_n(X/2), U_n(X/2) or 2 T*_n(X/4)."""
    if n < 1:
        raise ValueError("monic transform requires n >= 1")
    p = gen_recurrence(kind, n)
    if kind is ChebKind.FIRST:
        m = _rescale(p, 2, 2)
    elif kind is ChebKind.SECOND:
        m = _rescale(p, 1, 2)
    else:
        m = _rescale(p, 2, 4)
    if m.lc != 1:
        raise NonIntegralCoefficient(f"{kind.value}_{n} transform is not monic: {m}")
    return m


def monic_scale(kind: ChebKind) -> int:
    """Root of the monic transform divided by the matching root of P_n."""
    return 4 if kind is ChebKind.SHIFTED_FIRST else 2


def value_at_one(kind: ChebKind, n: int) -> Fraction:
    if kind is ChebKind.SHIFTED_FIRST:
        raise UnsupportedKind("value_at_one is defined for T and U only")
    return eval_rat(gen_recurrence(kind, n), 1)


def u_from_t_derivative(n: int) -> IntPoly:
    """U_n recovered as T_{n+1}' / (n+1), starting from the explicit T formula."""
    return exact_div(derivative(gen_closed_form(ChebKind.FIRST, n + 1)),
                     IntPoly((n + 1,)))


def clear_cache() -> None:
    """Drop memoized polynomials beyond the seeds."""
    for lad in _LADDERS.values():
        with lad._lock:
            del lad._polys[2:]
    with _shifted_lock:
        _shifted_cache.clear()


__all__ = [
    "ChebKind", "SHIFT", "binomial", "clear_cache", "gen_closed_form",
    "gen_recurrence", "ladder", "monic_scale", "monic_transform",
    "u_from_t_derivative", "value_at_one",
]
