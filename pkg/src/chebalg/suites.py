"""Named verification suites run by ``chebalg verify``.

A suite is a function ``max_n -> SuiteResult``. Suites run in the fixed
order of :data:`SUITES` so that output is byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import identities
from .chebyshev import ChebKind, gen_closed_form, gen_recurrence
from .identities import IdentityId
from .poly import IntPoly, eval_rat
from .quadext import closed_form_value, j_power_period
from .rational import cross_check
from .roots import count_roots, is_squarefree, sturm_chain

POWER_FORM_POINTS = tuple(Fraction(w) for w in
                           ("0", "1/2", "-1/2", "1/3", "-1/3", "3/4", "-3/4", "2", "-5/4"))
POWER_FORM_MAX_K = 30


@dataclass(frozen=True)
class Failure:
    n: int
    detail: str
    witness: Optional[IntPoly] = None


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, n: int, detail: str, witness: IntPoly | None = None) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(Failure(n, detail, witness))


def _closed_form(max_n: int) -> SuiteResult:
    res = SuiteResult("closed-form")
    for kind in (ChebKind.FIRST, ChebKind.SECOND):
        for n in range(1, max_n + 1):
            diff = gen_recurrence(kind, n) - gen_closed_form(kind, n)
            res.record(diff.is_zero(), n, f"{kind.value}_{n}: recurrence != closed form",
                       None if diff.is_zero() else diff)
    return res


def _identity_suite(identity: IdentityId) -> Callable[[int], SuiteResult]:
    def run(max_n: int) -> SuiteResult:
        res = SuiteResult(identity.value)
        for rep in identities.run_suite(max_n, [identity]):
            res.record(rep.passed, rep.index, f"{identity.value} fails at n={rep.index}",
                       rep.witness)
        return res
    return run


def _root_powers(max_n: int) -> SuiteResult:
    res = SuiteResult("root-powers")
    for kind in (ChebKind.FIRST, ChebKind.SECOND):
        for w in POWER_FORM_POINTS:
            for k in range(min(max_n, POWER_FORM_MAX_K) + 1):
                direct = eval_rat(gen_recurrence(kind, k), w)
                try:
                    via_r = closed_form_value(kind, w, k)
                except ArithmeticError as exc:
                    res.record(False, k, f"{kind.value}_{k}({w}): {exc}")
                    continue
                res.record(via_r == direct, k,
                           f"{kind.value}_{k}({w}): closed form {via_r} != {direct}")
    return res


def _j_period(max_n: int) -> SuiteResult:
    res = SuiteResult("j-period")
    for label, ok in j_power_period().checks:
        res.record(ok, 0, label)
    return res


def _roots(max_n: int) -> SuiteResult:
    res = SuiteResult("roots")
    for kind, a, b in ((ChebKind.FIRST, -1, 1), (ChebKind.SECOND, -1, 1),
                       (ChebKind.SHIFTED_FIRST, 0, 1)):
        for n in range(1, max_n + 1):
            p = gen_recurrence(kind, n)
            sf = is_squarefree(p)
            res.record(sf, n, f"{kind.value}_{n} is not squarefree")
            if sf:
                c = count_roots(sturm_chain(p), a, b)
                res.record(c == n, n, f"{kind.value}_{n}: {c} roots in ({a}, {b}), expected {n}")
    return res


def _rational(max_n: int) -> SuiteResult:
    res = SuiteResult("rational")
    for kind in ChebKind:
        for n in range(1, max_n + 1):
            rep = cross_check(kind, n)
            res.record(rep.agrees, n,
                       f"{kind.value}_{n}: computed {sorted(rep.computed)} "
                       f"monic {sorted(rep.computed_monic)} expected {sorted(rep.expected)}")
    return res


SUITES: dict[str, Callable[[int], SuiteResult]] = {"closed-form": _closed_form}
SUITES.update({i.value: _identity_suite(i) for i in IdentityId})
SUITES.update({"root-powers": _root_powers, "j-period": _j_period, "roots": _roots,
               "rational": _rational})


def run(max_n: int, only=None) -> list[SuiteResult]:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    names = list(SUITES) if only is None else [s for s in SUITES if s in set(only)]
    unknown = set(only or ()) - set(SUITES)
    if unknown:
        raise KeyError(", ".join(sorted(unknown)))
    return [SUITES[name](max_n) for name in names]
