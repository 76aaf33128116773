"""Independent re-check of a transcendence witness.

Only the stored evaluations are used, together with f(1) = 1.  A cell
(k, M) stands for f(n) = n^k chi(n) with chi M-periodic and multiplicative;
on integers coprime to M such a chi is completely multiplicative and takes
values whose phi(M)-th power is 1.  Three consequences are tested:

  unit:     gcd(n, M) = 1 and (f(n) / n^k)^phi(M) != 1
  period:   n = n' mod M, both coprime to M, f(n)/n^k != f(n')/n'^k
  product:  a, b, ab evaluated, gcd(ab, M) = 1, f(ab) != f(a) f(b)
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..exactnum import ONE, cyc, euler_phi


def _scaled(v, n, k):
    return v * Fraction(1, n**k) if k >= 0 else v * n ** (-k)


def refute_cell(evaluations, k: int, M: int):
    """A reason dict if the evaluations rule out (k, M), else None."""
    table = {1: ONE}
    for n, v in evaluations:
        table[int(n)] = cyc(v)
    units = sorted(n for n in table if gcd(n, M) == 1)
    e = euler_phi(M)
    for n in units:
        if _scaled(table[n], n, k) ** e != ONE:
            return {"rule": "unit", "n": [n]}
    first = {}
    for n in units:
        w = _scaled(table[n], n, k)
        r = n % M
        if r in first:
            n0, w0 = first[r]
            if w != w0:
                return {"rule": "period", "n": [n0, n]}
        else:
            first[r] = (n, w)
    for a in units:
        for b in units:
            if 1 < a <= b and a * b in table and table[a * b] != table[a] * table[b]:
                return {"rule": "product", "n": [a, b, a * b]}
    return None


def verify_witness(witness) -> list:
    """Cells (k, M) not refuted by the witness; empty means the witness holds."""
    ks = list(range(witness.k_max + 1))
    if witness.dfinite:
        ks += [-k for k in range(1, witness.k_max + 1)]
    return [(k, M) for M in range(1, witness.period_max + 1) for k in ks
            if refute_cell(witness.evaluations, k, M) is None]
