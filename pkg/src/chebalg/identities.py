"""Exact checks of the polynomial identities linking T_n and U_n.

Every check builds ``left - right`` in Z[X] and passes iff the residual is
the zero polynomial. The coprimality check instead computes
``gcd(T_n, T_{n+1})`` and passes iff it has degree 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .chebyshev import ChebKind, gen_recurrence
from .poly import IntPoly, X, compose, derivative, gcd_poly

ONE_MINUS_X2 = IntPoly((1, 0, -1))
X_SQUARED = IntPoly((0, 0, 1))


class IdentityId(enum.Enum):
    EQ1 = "eq1"
    EQ2 = "eq2"
    EQ3 = "eq3"
    EQ4 = "eq4"
    EQ5 = "eq5"
    ODE = "ode"
    COPRIME = "coprime"
    SHIFT_SQUARE = "shift-square"


@dataclass(frozen=True)
class CheckReport:
    identity: IdentityId
    index: int
    passed: bool
    witness: Optional[IntPoly] = None

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("a report carries a witness exactly when it failed")


def _T(n: int) -> IntPoly:
    return gen_recurrence(ChebKind.FIRST, n)


def _U(n: int) -> IntPoly:
    return gen_recurrence(ChebKind.SECOND, n)


def _residual(identity: IdentityId, n: int) -> IntPoly:
    if identity is IdentityId.EQ1:
        # T_{n+1} = U_{n+1} - X U_n
        return _T(n + 1) - (_U(n + 1) - X * _U(n))
    if identity is IdentityId.EQ2:
        # T_{n+1}' = (n+1) U_n
        return derivative(_T(n + 1)) - (n + 1) * _U(n)
    if identity is IdentityId.EQ3:
        # T_{n+2} = X T_{n+1} - (1-X^2) U_n
        return _T(n + 2) - (X * _T(n + 1) - ONE_MINUS_X2 * _U(n))
    if identity is IdentityId.EQ4:
        # (1-X^2) T_{n+1}' + (n+1)(X T_{n+1} - T_n) = 0
        return ONE_MINUS_X2 * derivative(_T(n + 1)) + (n + 1) * (X * _T(n + 1) - _T(n))
    if identity is IdentityId.EQ5:
        # (n+1) T_{n+1} = X U_n - (1-X^2) U_n'
        u = _U(n)
        return (n + 1) * _T(n + 1) - (X * u - ONE_MINUS_X2 * derivative(u))
    if identity is IdentityId.ODE:
        # (1-X^2) T_n'' - X T_n' + n^2 T_n = 0
        t = _T(n)
        d1 = derivative(t)
        return ONE_MINUS_X2 * derivative(d1) - X * d1 + (n * n) * t
    if identity is IdentityId.SHIFT_SQUARE:
        # T*_n(X^2) = T_{2n}
        return compose(gen_recurrence(ChebKind.SHIFTED_FIRST, n), X_SQUARED) - _T(2 * n)
    raise ValueError(f"{identity} has no residual form")


def check_identity(identity: IdentityId, n: int) -> CheckReport:
    if n < 0:
        raise ValueError("identities are indexed by n >= 0")
    if identity is IdentityId.COPRIME:
        g = gcd_poly(_T(n), _T(n + 1))
        ok = g.degree == 0
        return CheckReport(identity, n, ok, None if ok else g)
    r = _residual(identity, n)
    return CheckReport(identity, n, r.is_zero(), None if r.is_zero() else r)


def index_range(identity: IdentityId, max_n: int) -> range:
    """Indices checked for ``identity`` by a suite run up to ``max_n``.

    The shift-square identity touches T_{2n}, so it runs to ceil(max_n / 2).
    """
    if identity is IdentityId.SHIFT_SQUARE:
        return range(0, (max_n + 1) // 2 + 1)
    return range(0, max_n + 1)


def run_suite(max_n: int, identities=None) -> list[CheckReport]:
    """Reports ordered by identity (declaration order), then ascending n."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    ids = list(IdentityId) if identities is None else [
        i for i in IdentityId if i in set(identities)]
    return [check_identity(i, n) for i in ids for n in index_range(i, max_n)]


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)
