import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from chebalg.chebyshev import ChebKind
from chebalg.errors import EndpointIsRoot, NotSquarefree, ZeroPolynomial
from chebalg.poly import ZERO, IntPoly, sign_at
from chebalg.rational import expected_rational_roots
from chebalg.roots import (IsolInterval, count_roots, is_squarefree, isolate_roots, refine,
                           sturm_chain)

from conftest import P, T, Tstar, U
from oracles import gcd_q, sign_changes_on_grid, sturm_q, variations_q


def test_chain_shapes():
    chain = sturm_chain(P(-2, 0, 1))
    assert chain.polys == (P(-2, 0, 1), P(0, 1), P(1))
    assert count_roots(sturm_chain(T(3)), -1, 1) == 3
    c = sturm_chain(P(1, 0, 1))
    assert count_roots(c, -10, 10) == 0
    assert count_roots(c, F(-1, 3), F(7, 2)) == 0


def test_chain_errors():
    with pytest.raises(NotSquarefree):
        sturm_chain(P(1, -2, 1))
    with pytest.raises(ZeroPolynomial):
        sturm_chain(ZERO)
    with pytest.raises(EndpointIsRoot):
        count_roots(sturm_chain(T(3)), 0, 1)
    with pytest.raises(ValueError):
        count_roots(sturm_chain(T(3)), 1, -1)


def test_count_examples_against_grid_oracle():
    assert count_roots(sturm_chain(T(5)), -1, 1) == 5
    assert count_roots(sturm_chain(U(4)), -1, 1) == 4
    assert sign_changes_on_grid(list(T(5).coeffs), -1, 1, 400) == 5
    assert sign_changes_on_grid(list(U(4).coeffs), -1, 1, 400) == 4


def test_squarefree():
    assert is_squarefree(T(6))
    assert not is_squarefree(P(1, -2, 1))
    assert is_squarefree(U(5))
    assert is_squarefree(P(3))
    with pytest.raises(ZeroPolynomial):
        is_squarefree(ZERO)


@pytest.mark.parametrize("n", range(1, 33))
def test_roots_real_simple_and_inside(n):
    for p in (T(n), U(n)):
        assert is_squarefree(p)
        assert count_roots(sturm_chain(p), -1, 1) == n
        # nothing outside: a wide window sees the same n roots
        assert count_roots(sturm_chain(p), -1000, 1000) == n
    assert count_roots(sturm_chain(Tstar(n)), 0, 1) == n


def test_isolation_examples():
    ivs = isolate_roots(T(3), -1, 1)
    assert len(ivs) == 3
    assert ivs[1] == IsolInterval.point(0)
    assert not ivs[0].is_exact() and not ivs[2].is_exact()
    assert isolate_roots(U(2), -1, 1) == [IsolInterval.point(F(-1, 2)),
                                          IsolInterval.point(F(1, 2))]
    assert isolate_roots(T(1), -1, 1) == [IsolInterval.point(0)]


def test_isol_interval_invariants():
    with pytest.raises(ValueError):
        IsolInterval(F(1), F(0))
    with pytest.raises(ValueError):
        IsolInterval(F(0), F(1), F(1, 2))


def _check_isolation(p, ivs, a, b):
    chain = sturm_chain(p)
    for iv in ivs:
        assert iv.lo.denominator & (iv.lo.denominator - 1) == 0
        assert iv.hi.denominator & (iv.hi.denominator - 1) == 0
        if iv.is_exact():
            assert sign_at(p, iv.exact) == 0
        else:
            assert count_roots(chain, iv.lo, iv.hi) == 1
            assert sign_at(p, iv.lo) * sign_at(p, iv.hi) == -1
    # half-open (lo, hi] pieces may touch; an exact point never meets an endpoint
    for u, v in zip(ivs, ivs[1:]):
        assert u.hi <= v.lo
        if u.is_exact() or v.is_exact():
            assert u.hi < v.lo
    assert len(ivs) == count_roots(chain, a, b)


@pytest.mark.parametrize("n", range(1, 17))
def test_isolation_and_refinement(n):
    for kind, p in ((ChebKind.FIRST, T(n)), (ChebKind.SECOND, U(n))):
        ivs = isolate_roots(p, -1, 1)
        assert len(ivs) == n
        _check_isolation(p, ivs, -1, 1)
        exact = {iv.exact for iv in ivs if iv.is_exact()}
        assert exact == expected_rational_roots(kind, n)
        for iv in ivs:
            r = refine(p, iv, F(1, 2 ** 20))
            assert r.is_exact() or (r.width <= F(1, 2 ** 20)
                                    and sign_at(p, r.lo) * sign_at(p, r.hi) == -1)
            assert r.lo >= iv.lo and r.hi <= iv.hi


def test_refine_examples():
    iv = refine(T(2), IsolInterval(F(0), F(1)), F(1, 2 ** 40))
    assert iv.width <= F(1, 2 ** 40)
    assert 2 * iv.lo ** 2 - 1 < 0 < 2 * iv.hi ** 2 - 1
    pt = IsolInterval.point(F(1, 2))
    assert refine(U(2), pt, F(1, 8)) is pt
    for iv in isolate_roots(T(4), -1, 1):
        r = refine(T(4), iv, F(1, 2 ** 20))
        assert r.width <= F(1, 2 ** 20)
    with pytest.raises(ValueError):
        refine(T(2), IsolInterval(F(3, 4), F(1)), F(1, 4))


def test_isolation_of_shifted():
    for n in range(1, 12):
        ivs = isolate_roots(Tstar(n), 0, 1)
        assert len(ivs) == n
        exact = {iv.exact for iv in ivs if iv.is_exact()}
        assert exact == ({F(1, 2)} if n % 2 else set())


def _naive_count(coeffs, a, b):
    seq = sturm_q(coeffs)
    return variations_q(seq, a) - variations_q(seq, b)


def _random_squarefree(rng, max_deg=8, bound=20):
    while True:
        deg = rng.randint(1, max_deg)
        c = [rng.randint(-bound, bound) for _ in range(deg)] + [rng.choice(
            [x for x in range(-bound, bound + 1) if x])]
        if len(gcd_q(c, [k * c[k] for k in range(1, len(c))])) == 1:
            return c


def test_sign_safe_chain_matches_rational_chain():
    rng = random.Random(20261016)
    for _ in range(200):
        c = _random_squarefree(rng)
        p = IntPoly(c)
        chain = sturm_chain(p)
        for _ in range(3):
            a = F(rng.randint(-60, 60), rng.randint(1, 7))
            b = a + F(rng.randint(1, 80), rng.randint(1, 7))
            if sign_at(p, a) == 0 or sign_at(p, b) == 0:
                continue
            assert count_roots(chain, a, b) == _naive_count(c, a, b)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=9).filter(lambda c: c[-1] != 0))
def test_isolation_on_random_polys(c):
    p = IntPoly(c)
    if not is_squarefree(p):
        return
    # power of two above the Cauchy root bound keeps every midpoint dyadic
    cauchy = F(sum(abs(x) for x in c), abs(c[-1])) + 1
    bound = 1
    while bound <= cauchy:
        bound *= 2
    ivs = isolate_roots(p, -bound, bound)
    _check_isolation(p, ivs, -bound, bound)
    assert len(ivs) == _naive_count(c, -bound, bound)
