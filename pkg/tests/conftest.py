"""Shared independent oracles (sympy) and strategies."""
from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import strategies as st

from multgf.exactnum import Cyc, cyc_make

z = sympy.Symbol("z")


def sym_to_fraction(x):
    x = sympy.nsimplify(x)
    return Fraction(int(x.p), int(x.q))


def series_oracle(expr, N):
    """[z^0..z^{N-1}] of a sympy expression, as Fractions."""
    s = sympy.series(expr, z, 0, N).removeO()
    poly = sympy.Poly(s, z)
    out = [Fraction(0)] * N
    for (d,), c in poly.terms():
        out[d] = sym_to_fraction(c)
    return out


def cyc_to_complex(c: Cyc) -> complex:
    return complex(c)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def cyclotomics(draw, orders=(1, 3, 4, 5, 7, 8, 12)):
    m = draw(st.sampled_from(orders))
    coeffs = draw(st.lists(rationals, min_size=1, max_size=m))
    return cyc_make(m, coeffs)


@pytest.fixture
def sym_z():
    return z


def grid_oracle(witness):
    """Unrefuted (k, M) cells, by plain rational arithmetic (rational-valued f only)."""
    ev = {n: v.to_fraction() for n, v in witness.evaluations}
    ev.setdefault(1, Fraction(1))
    left = []
    for k in range(witness.k_max + 1):
        for M in range(1, witness.period_max + 1):
            units = {n: ev[n] / Fraction(n) ** k for n in ev if gcd(n, M) == 1}
            # the only rational roots of unity are +1 and -1
            bad = any(abs(r) != 1 for r in units.values())
            by_class = {}
            for n, r in units.items():
                by_class.setdefault(n % M, set()).add(r)
            bad = bad or any(len(s) > 1 for s in by_class.values())
            bad = bad or any(gcd(a * b, M) == 1 and a * b in ev and ev[a * b] != ev[a] * ev[b]
                             for a in ev for b in ev)
            if not bad:
                left.append((k, M))
    return left


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
