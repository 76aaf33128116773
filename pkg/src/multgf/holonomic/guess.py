"""Recurrence guessing by exact nullspace computation."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import flint

from ..errors import ReconstructionError
from ..exactnum import Cyc, UniPoly, cyc
from .. import linalg
from .recurrence import PRecurrence, largest_integer_root, relation_residual

MARGIN = 20


def required_terms(max_order: int, max_degree: int) -> int:
    return (max_order + 1) * (max_degree + 2) + max_order + MARGIN


def _nullspace(rows, ncols, rational):
    if rational:
        M = flint.fmpq_mat(len(rows), ncols, [flint.fmpq(x.numerators[0], x.denominator) for r in rows for x in r])
        R, rank = M.rref()
        piv, c = [], 0
        for i in range(rank):
            while R[i, c] == 0:
                c += 1
            piv.append(c)
        free = [j for j in range(ncols) if j not in set(piv)]
        out = []
        for f in free:
            v = [Fraction(0)] * ncols
            v[f] = Fraction(1)
            for i, p in enumerate(piv):
                x = -R[i, f]
                v[p] = Fraction(int(x.p), int(x.q))
            out.append([Cyc.from_rational(x) for x in v])
        return out
    return linalg.nullspace(rows, ncols, Cyc.from_rational(0), Cyc.from_rational(1))


def rec_guess(terms: Sequence, max_order: int, max_degree: int) -> Optional[PRecurrence]:
    """Least (order, degree) recurrence fitting every given term, or None.

    ``terms[i]`` is f(i + 1).  A candidate must satisfy the relation at every
    n in [order + 1, len(terms)]; valid_from is then pushed past the integer
    roots of P_0.
    """
    vals = [cyc(v) for v in terms]
    N = len(vals)
    need = required_terms(max_order, max_degree)
    if N < need:
        raise ReconstructionError(f"rec_guess needs at least {need} terms for order {max_order}, degree {max_degree}; got {N}")
    rational = all(v.is_rational() for v in vals)
    for d in range(0, max_order + 1):
        for D in range(0, max_degree + 1):
            ncols = (d + 1) * (D + 1)
            rows = []
            for n in range(d + 1, N + 1):
                row = []
                for i in range(d + 1):
                    f = vals[n - i - 1]
                    pw = 1
                    for _ in range(D + 1):
                        row.append(f * pw)
                        pw *= n
                rows.append(row)
            for vec in _nullspace(rows, ncols, rational):
                coeffs = [UniPoly(vec[i * (D + 1):(i + 1) * (D + 1)]) for i in range(d + 1)]
                if coeffs[0].is_zero() or coeffs[-1].is_zero():
                    continue
                root = largest_integer_root(coeffs[0])
                vf = max(d, root if root is not None else d)
                if vf > N:
                    continue
                if any(not relation_residual(coeffs, vals, n).is_zero() for n in range(vf + 1, N + 1)):
                    continue
                lead = coeffs[-1].lead
                coeffs = [c * lead.inverse() for c in coeffs] if not lead.is_rational() else coeffs
                return PRecurrence(_normalize(coeffs), vf, vals[:vf])
    return None


def _normalize(coeffs):
    """Scale rational coefficient polynomials to coprime integers."""
    if not all(c.is_rational() for c in coeffs):
        return coeffs
    from math import gcd, lcm

    den = lcm(*(x.denominator for c in coeffs for x in c.coeffs))
    ints = [[x.numerators[0] * (den // x.denominator) for x in c.coeffs] for c in coeffs]
    g = 0
    for cs in ints:
        for x in cs:
            g = gcd(g, x)
    lead = next(cs[-1] for cs in ints if cs)
    if lead < 0:
        g = -g
    return [UniPoly([Fraction(x, g) for x in cs]) for cs in ints]
