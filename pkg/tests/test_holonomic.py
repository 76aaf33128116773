import random
from fractions import Fraction
from math import comb, factorial

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from multgf.errors import CoprimalityError, InsufficientPrefixError, NotARootError, ReconstructionError, StructuralError
from multgf.exactnum import ONE, ZERO, UniPoly, zeta
from multgf.holonomic import (AlgebraicEquation, IllPosedRecurrence, PRecurrence, algebraic_series,
                              algebraic_to_recurrence, bezivin_shift_check, integer_roots, nonvanishing_scan,
                              rec_eval, rec_guess, rec_product, rec_section, rec_sum)
from multgf.multfun import mf_builtin, periodic_make

FIB = PRecurrence([[1], [-1], [-1]], 2, [1, 1])
GEO2 = PRecurrence([[1], [-2]], 1, [2])
GEO3 = PRecurrence([[1], [-3]], 1, [3])
# c(n) = C_{n-1}: n c(n) = (4n - 6) c(n - 1)
CATALAN = PRecurrence([[0, 1], [6, -4]], 1, [1])
ONES = PRecurrence([[1], [-1]], 1, [1])
ZEROS = PRecurrence([[1], [-1]], 1, [0])

Z = UniPoly([0, 1])


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def fib(n):
    return int(sympy.fibonacci(n))


def ints(vals):
    return [int(v.to_fraction()) for v in vals]


def test_rec_eval_examples():
    assert ints(rec_eval(FIB, 6)) == [1, 1, 2, 3, 5, 8]
    assert ints(rec_eval(CATALAN, 5)) == [1, 1, 2, 5, 14]
    assert ints(rec_eval(GEO2, 4)) == [2, 4, 8, 16]
    assert ints(rec_eval(CATALAN, 40)) == [catalan(n - 1) for n in range(1, 41)]


def test_rec_eval_ill_posed():
    with pytest.raises(IllPosedRecurrence):
        PRecurrence([[-5, 1], [1]], 1, [1])  # P_0 vanishes at n = 5
    with pytest.raises(StructuralError):
        PRecurrence([[1], [-1], [-1]], 2, [1])
    assert integer_roots(UniPoly([6, -5, 1])) == [2, 3]
    assert integer_roots(UniPoly([1, 0, 1])) == []


def test_text_round_trip():
    for r in (FIB, CATALAN, PRecurrence([[1], [zeta(4)]], 1, [zeta(4, 3)])):
        again = PRecurrence.from_text(r.to_text())
        assert again.coeffs == r.coeffs and again.initial == r.initial and again.valid_from == r.valid_from
    with pytest.raises(StructuralError, match="line 2"):
        PRecurrence.from_text("valid_from: 1\nP_0 [1]\ninitial: [1]\n")


def test_cyclotomic_recurrence():
    r = PRecurrence([[1], [-zeta(4)]], 1, [zeta(4)])
    assert rec_eval(r, 5) == [zeta(4, n) for n in range(1, 6)]


def test_sum_examples():
    s = rec_sum(GEO2, GEO3)
    assert s.order == 2
    assert [c.coeffs for c in s.coeffs] == [c.coeffs for c in (UniPoly([1]), UniPoly([-5]), UniPoly([6]))]
    assert ints(rec_eval(s, 50)) == [2**n + 3**n for n in range(1, 51)]
    assert rec_eval(rec_sum(FIB, ZEROS), 60) == rec_eval(FIB, 60)
    ff = rec_sum(FIB, FIB)
    assert ff.order <= 2
    assert ints(rec_eval(ff, 5)) == [2, 2, 4, 6, 10]


def test_product_examples():
    p = rec_product(GEO2, GEO3)
    assert p.order == 1
    assert ints(rec_eval(p, 30)) == [6**n for n in range(1, 31)]
    assert rec_eval(rec_product(CATALAN, ONES), 60) == rec_eval(CATALAN, 60)
    f2 = rec_product(FIB, FIB)
    assert f2.order <= 4
    assert ints(rec_eval(f2, 50)) == [fib(n) ** 2 for n in range(1, 51)]


def test_section_examples():
    s = rec_section(FIB, 2, 0)
    assert s.order == 2
    assert [c.coeffs for c in s.coeffs] == [c.coeffs for c in (UniPoly([1]), UniPoly([-3]), UniPoly([1]))]
    assert ints(rec_eval(s, 40)) == [fib(2 * n) for n in range(1, 41)]
    assert rec_eval(rec_section(CATALAN, 1, 0), 60) == rec_eval(CATALAN, 60)
    g = rec_section(GEO2, 3, 1)
    assert g.order == 1
    assert ints(rec_eval(g, 3)) == [16, 128, 1024]


def test_closures_with_polynomial_coefficients():
    fact = PRecurrence([[0, 1], [-1]], 1, [1])  # n f(n) = f(n-1): 1/n!
    t = rec_eval(fact, 200)
    c = rec_eval(CATALAN, 200)
    assert rec_eval(rec_sum(fact, CATALAN), 200) == [x + y for x, y in zip(t, c)]
    assert rec_eval(rec_product(fact, CATALAN), 200) == [x * y for x, y in zip(t, c)]
    for q in (2, 3):
        for j in range(q):
            sec = rec_section(CATALAN, q, j)
            assert sec.order <= 1
            assert rec_eval(sec, 60) == [c[q * n + j - 1] for n in range(1, 61)]


def _random_rec(rng, order, degree):
    while True:
        coeffs = [[rng.randint(-3, 3) for _ in range(degree + 1)] for _ in range(order + 1)]
        coeffs[0] = [rng.randint(1, 3)] + [rng.randint(0, 3) for _ in range(degree)]
        if not any(coeffs[-1]):
            continue
        try:
            return PRecurrence(coeffs, order, [rng.randint(-5, 5) for _ in range(order)])
        except IllPosedRecurrence:
            continue


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 2), st.integers(1, 2), st.integers(0, 1), st.integers(0, 1))
def test_closure_contracts(seed, da, db, ga, gb):
    rng = random.Random(seed)
    a, b = _random_rec(rng, da, ga), _random_rec(rng, db, gb)
    ta, tb = rec_eval(a, 200), rec_eval(b, 200)
    s, p = rec_sum(a, b), rec_product(a, b)
    assert s.order <= a.order + b.order and p.order <= a.order * b.order
    assert rec_eval(s, 200) == [x + y for x, y in zip(ta, tb)]
    assert rec_eval(p, 200) == [x * y for x, y in zip(ta, tb)]
    q = rng.randint(1, 3)
    j = rng.randrange(q)
    c = rec_section(a, q, j)
    assert c.order <= a.order
    long = rec_eval(a, q * 60 + j)
    assert rec_eval(c, 60) == [long[q * n + j - 1] for n in range(1, 61)]


def _substitute(eq, coeffs, N):
    """Coefficients 0..N-1 of P(z, y) with y given by ``coeffs``."""
    y = coeffs[:N]
    acc = [ZERO] * N
    pw = [ONE] + [ZERO] * (N - 1)
    for P in eq.coeffs:
        for i, c in enumerate(P.coeffs):
            for t in range(N - i):
                if not pw[t].is_zero():
                    acc[t + i] = acc[t + i] + c * pw[t]
        nxt = [ZERO] * N
        for s, a in enumerate(pw):
            if a.is_zero():
                continue
            for t in range(N - s):
                if not y[t].is_zero():
                    nxt[s + t] = nxt[s + t] + a * y[t]
        pw = nxt
    return acc


def test_algebraic_to_recurrence_catalan():
    eq = AlgebraicEquation([Z, UniPoly([-1]), UniPoly([1])])
    rec = algebraic_to_recurrence(eq, [0, 1, 1, 2])
    assert rec.order == 1
    vals = rec_eval(rec, 100)
    assert ints(vals) == [catalan(n - 1) for n in range(1, 101)]
    assert all(v.is_zero() for v in _substitute(eq, [ZERO] + vals, 101))


def test_algebraic_to_recurrence_rational():
    eq = AlgebraicEquation([-Z, UniPoly([1, -1])])
    rec = algebraic_to_recurrence(eq, [0, 1, 1])
    assert rec.order == 1
    assert ints(rec_eval(rec, 50)) == [1] * 50


def test_algebraic_to_recurrence_sqrt():
    eq = AlgebraicEquation([UniPoly([-1, -1]), UniPoly([]), UniPoly([1])])
    rec = algebraic_to_recurrence(eq, [1, Fraction(1, 2)])
    vals = rec_eval(rec, 200)
    oracle = [sympy.binomial(sympy.Rational(1, 2), n) for n in range(1, 201)]
    assert [v.to_fraction() for v in vals] == [Fraction(int(o.p), int(o.q)) for o in oracle]
    assert all(v.is_zero() for v in _substitute(eq, [ONE] + vals, 201))


def test_algebraic_errors():
    eq = AlgebraicEquation([Z, UniPoly([-1]), UniPoly([1])])
    with pytest.raises(NotARootError):
        algebraic_to_recurrence(eq, [0, 1, 2, 2])
    # y^2 = z^2 has dP/dy = 2y vanishing at z^0: branch needs the z^1 term
    sq = AlgebraicEquation([UniPoly([0, 0, -1]), UniPoly([]), UniPoly([1])])
    with pytest.raises(InsufficientPrefixError):
        algebraic_series(sq, [0], 5)
    assert algebraic_series(sq, [0, -1], 5) == [0, -1, 0, 0, 0]


def test_guess_examples():
    sq = rec_guess([n * n for n in range(1, 65)], 2, 2)
    assert sq is not None and sq.order <= 3
    assert ints(rec_eval(sq, 64)) == [n * n for n in range(1, 65)]
    fact = rec_guess([factorial(n) for n in range(1, 61)], 1, 1)
    assert fact.order == 1
    P0, P1 = fact.coeffs
    # proportional to f(n) - n f(n-1)
    assert P1.coeffs == (-P0[0] * Z).coeffs or (P1 * -1).coeffs == (P0[0] * Z).coeffs
    primes = [1 if sympy.isprime(n) else 0 for n in range(1, 61)]
    assert rec_guess(primes, 2, 2) is None
    with pytest.raises(ReconstructionError, match="needs at least"):
        rec_guess([1, 2, 3], 2, 2)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 2**32))
def test_guess_completeness(seed):
    rng = random.Random(seed)
    r = _random_rec(rng, rng.randint(1, 2), rng.randint(0, 1))
    terms = rec_eval(r, 80)
    g = rec_guess(terms, 2, 1)
    assert g is not None
    assert rec_eval(g, 80) == terms


def test_bezivin_examples():
    ident = mf_builtin("n_pow_k", k=1)
    for q in (1, 7, 11, 13):
        assert bezivin_shift_check(ident, GEO2, q, 500) is None
    chi = periodic_make(4, [1, 0, -1, 0])
    alt = PRecurrence([[1], [0], [1]], 2, [1, 0])  # f(n) = -f(n-2)
    assert bezivin_shift_check(chi, alt, 7, 500) is None
    with pytest.raises(CoprimalityError):
        bezivin_shift_check(chi, alt, 3, 500)
    tau = mf_builtin("tau")
    assert bezivin_shift_check(tau, ONES, 5, 500) == 5
    with pytest.raises(CoprimalityError):
        bezivin_shift_check(tau, FIB, 5, 100)  # (2*2+1)! = 120


def test_nonvanishing_examples():
    mu = nonvanishing_scan(mf_builtin("mu"), 50, 3)
    primes = list(sympy.primerange(2, 51))
    assert mu.zeros == [(p, k) for p in primes for k in (2, 3)]
    assert mu.threshold is None
    phi = nonvanishing_scan(mf_builtin("phi"), 50, 3)
    assert phi.zeros == [] and phi.threshold == 2
    odd = periodic_make(2, [1, 0])
    rep = nonvanishing_scan(odd, 50, 2)
    assert rep.zeros == [(2, 1), (2, 2)] and rep.threshold == 3
