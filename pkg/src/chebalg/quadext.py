"""Arithmetic in Q[s]/(s^2 - d) for a rational d.

The ring is a field only when d is not a rational square, so inversion
checks the norm explicitly. No embedding into R or C is ever used; the sign
of d does not matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chebyshev import ChebKind
from .errors import (ExcludedPoint, InternalNonRationalResult,
                     MismatchedDiscriminant, UnsupportedKind, ZeroDivisor)


@dataclass(frozen=True)
class QuadExtElem:
    """``a + b*sqrt(d)``; equality is componentwise for a shared d."""

    a: Fraction
    b: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "d"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def rational(cls, a, d) -> QuadExtElem:
        return cls(Fraction(a), Fraction(0), Fraction(d))

    def _check(self, other: QuadExtElem) -> None:
        if self.d != other.d:
            raise MismatchedDiscriminant(f"d={self.d} vs d={other.d}")

    def __add__(self, other: QuadExtElem) -> QuadExtElem:
        self._check(other)
        return QuadExtElem(self.a + other.a, self.b + other.b, self.d)

    def __sub__(self, other: QuadExtElem) -> QuadExtElem:
        self._check(other)
        return QuadExtElem(self.a - other.a, self.b - other.b, self.d)

    def __neg__(self) -> QuadExtElem:
        return QuadExtElem(-self.a, -self.b, self.d)

    def __mul__(self, other: QuadExtElem) -> QuadExtElem:
        return qe_mul(self, other)

    def __truediv__(self, other: QuadExtElem) -> QuadExtElem:
        return qe_mul(self, qe_inv(other))

    def __pow__(self, k: int) -> QuadExtElem:
        return qe_pow(self, k)

    def conjugate(self) -> QuadExtElem:
        return QuadExtElem(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        return f"{self.a} + ({self.b})*sqrt({self.d})"


def qe_mul(x: QuadExtElem, y: QuadExtElem) -> QuadExtElem:
    x._check(y)
    return QuadExtElem(x.a * y.a + x.d * x.b * y.b, x.a * y.b + x.b * y.a, x.d)


def qe_inv(x: QuadExtElem) -> QuadExtElem:
    nrm = x.norm()
    if nrm == 0:
        raise ZeroDivisor(f"{x} has norm 0 and is not invertible")
    return QuadExtElem(x.a / nrm, -x.b / nrm, x.d)


def qe_pow(x: QuadExtElem, k: int) -> QuadExtElem:
    if k < 0:
        return qe_pow(qe_inv(x), -k)
    result = QuadExtElem.rational(1, x.d)
    base = x
    while k:
        if k & 1:
            result = qe_mul(result, base)
        base = qe_mul(base, base)
        k >>= 1
    return result


def chebyshev_root(w) -> QuadExtElem:
    """``r = w + sqrt(w^2 - 1)``, a root of X^2 - 2wX + 1."""
    w = Fraction(w)
    return QuadExtElem(w, Fraction(1), w * w - 1)


def closed_form_value(kind: ChebKind, w, k: int) -> Fraction:
    """T_k(w) or U_k(w) evaluated through powers of r instead of the recurrence.

    t_k = (r^(2k) + 1) / (2 r^k),   u_k = (r^(2k+2) - 1) / (r^k (r^2 - 1))
    """
    w = Fraction(w)
    if w in (1, -1):
        raise ExcludedPoint(f"w = {w} is excluded (r would equal 1/r)")
    if k < 0:
        raise ValueError("k must be nonnegative")
    r = chebyshev_root(w)
    d = r.d
    one = QuadExtElem.rational(1, d)
    rk = qe_pow(r, k)
    if kind is ChebKind.FIRST:
        value = (qe_mul(rk, rk) + one) / (QuadExtElem.rational(2, d) * rk)
    elif kind is ChebKind.SECOND:
        r2 = qe_mul(r, r)
        value = (qe_pow(r, 2 * k + 2) - one) / (rk * (r2 - one))
    else:
        raise UnsupportedKind("closed forms exist for T and U only")
    if not value.is_rational():
        raise InternalNonRationalResult(f"{kind.value}_{k}({w}) = {value}")
    return value.a


J = QuadExtElem(Fraction(-1, 2), Fraction(1, 2), Fraction(-3))


@dataclass(frozen=True)
class PeriodReport:
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def j_power_period() -> PeriodReport:
    """Check that j = -1/2 + sqrt(-3)/2 has order exactly 3 and j^(2n) is never -1."""
    d = J.d
    one = QuadExtElem.rational(1, d)
    minus_one = QuadExtElem.rational(-1, d)
    j2, j3 = J ** 2, J ** 3
    checks = [
        ("j^3 == 1", j3 == one),
        ("j != 1", J != one),
        ("j^2 != 1", j2 != one),
        ("j^2 == -1/2 - sqrt(-3)/2",
         j2 == QuadExtElem(Fraction(-1, 2), Fraction(-1, 2), d)),
    ]
    for n in range(3):
        checks.append((f"j^{2 * n} != -1", J ** (2 * n) != minus_one))
    return PeriodReport(tuple(checks))
