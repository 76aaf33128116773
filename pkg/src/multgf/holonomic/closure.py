"""Closure of P-recursive sequences under sum, term-wise product and sections.

Every shifted value c(n + k) of the combined sequence is a rational-function
combination v_k(n) of a fixed window of input values.  The least K with
v_0..v_K dependent over Q(n) gives the relation sum lambda_k(n) c(n + k) = 0.
The lambda_k are polynomial Cramer minors; they are obtained by evaluating at
integer points and interpolating under an a-priori degree bound, and the
identity is then proven by checking it at more points than the degree of the
cleared numerator.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import flint

from ..errors import ContractViolation
from ..exactnum import ONE, ZERO, UniPoly, poly_gcd
from .. import linalg
from .recurrence import PRecurrence, finalize, rec_eval


# -- scalar backends -----------------------------------------------------

class _Rational:
    zero = flint.fmpq(0)
    one = flint.fmpq(1)

    def __init__(self, recs):
        self.polys = [[self._poly(c) for c in r.coeffs] for r in recs]

    @staticmethod
    def _poly(p: UniPoly):
        return flint.fmpq_poly([flint.fmpq(c.numerators[0], c.denominator) for c in p.coeffs])

    @staticmethod
    def ev(poly, n):
        return poly(n)

    @staticmethod
    def is_zero(x):
        return x == 0

    def solve(self, A, b):
        K = len(A)
        if K == 0:
            return self.one, []
        M = flint.fmpq_mat(K, K, [x for row in A for x in row])
        d = M.det()
        if d == 0:
            return d, None
        x = M.solve(flint.fmpq_mat(K, 1, list(b)))
        return d, [x[i, 0] for i in range(K)]

    def rank(self, rows, ncols):
        if not rows or ncols == 0:
            return 0
        return flint.fmpq_mat(len(rows), ncols, [x for r in rows for x in r]).rank()

    def pivot_rows(self, cols, nrows):
        """Rows of the nrows x K matrix (given by columns) forming a nonsingular K x K block."""
        K = len(cols)
        if K == 0:
            return []
        M = flint.fmpq_mat(K, nrows, [x for c in cols for x in c])
        R, r = M.rref()
        if r < K:
            return None
        piv, c = [], 0
        for i in range(r):
            while R[i, c] == 0:
                c += 1
            piv.append(c)
        return piv

    def reduce_content(self, coeff_lists):
        polys = [flint.fmpq_poly(cs) for cs in coeff_lists]
        g = None
        for p in polys:
            if not p.is_zero():
                g = p if g is None else g.gcd(p)
        polys = [p / g if not p.is_zero() else p for p in polys]
        # scale to primitive integer polynomials
        den = lcm(*(int(p.denom()) for p in polys if not p.is_zero()))
        ints = [[int(c * den) for c in p.coeffs()] for p in polys]
        cont = 0
        for cs in ints:
            for c in cs:
                cont = gcd(cont, c)
        lead = next(cs[-1] for cs in reversed(ints) if cs)
        if lead < 0:
            cont = -cont
        return [UniPoly([Fraction(c, cont) for c in cs]) for cs in ints]


class _Cyclotomic:
    zero = ZERO
    one = ONE

    def __init__(self, recs):
        self.polys = [list(r.coeffs) for r in recs]

    @staticmethod
    def ev(poly, n):
        return poly.eval_int(n)

    @staticmethod
    def is_zero(x):
        return x.is_zero()

    def solve(self, A, b):
        if not A:
            return self.one, []
        return linalg.solve_square(A, b)

    def rank(self, rows, ncols):
        return linalg.rank(rows, ncols)

    def pivot_rows(self, cols, nrows):
        K = len(cols)
        if K == 0:
            return []
        piv = linalg.row_echelon([list(c) for c in cols], nrows)
        return piv if len(piv) == K else None

    def reduce_content(self, coeff_lists):
        polys = [UniPoly(cs) for cs in coeff_lists]
        g = None
        for p in polys:
            if not p.is_zero():
                g = p if g is None else poly_gcd(g, p)
        polys = [p.exact_div(g) if not p.is_zero() else p for p in polys]
        lead = next(p.lead for p in reversed(polys) if not p.is_zero())
        inv = lead.inverse()
        return [p * inv for p in polys]


def _backend(recs):
    if all(r.is_rational() for r in recs):
        return _Rational(recs)
    return _Cyclotomic(recs)


# -- unrolling at an integer point ----------------------------------------

def _unroll(be, polys, s, m, T):
    """Coordinates of a(m + t), t = 0..T, in the window a(m), ..., a(m - s + 1).

    Returns (vectors, denominators D_t = prod_{j<=t} P_0(m + j)) or None when
    some P_0(m + j) vanishes.
    """
    zero, one = be.zero, be.one
    basis = []
    for i in range(s):
        e = [zero] * s
        e[i] = one
        basis.append(e)
    # hist[t + s - 1] is the vector of a(m + t) for t >= 1 - s
    hist = list(reversed(basis))
    dens = [one]
    for t in range(1, T + 1):
        p0 = be.ev(polys[0], m + t)
        if be.is_zero(p0):
            return None
        acc = [zero] * s
        for i in range(1, s + 1):
            c = be.ev(polys[i], m + t)
            if be.is_zero(c):
                continue
            prev = hist[t - i + s - 1]
            acc = [x + c * y for x, y in zip(acc, prev)]
        inv = -one / p0
        hist.append([x * inv for x in acc])
        dens.append(dens[-1] * p0)
    return hist[s - 1:], dens


def _kron(u, v):
    return [x * y for x in u for y in v]


# -- generic relation finder ----------------------------------------------

class _Problem:
    """Supplies v_k(n), D_k(n) at integer n and degree bounds for D_k v_k."""

    def __init__(self, be, R, Kmax, columns, deltas, n_start):
        self.be, self.R, self.Kmax = be, R, Kmax
        self.columns = columns  # (n, K) -> (vectors, dens) | None
        self.deltas = deltas    # K -> [delta_0..delta_K]
        self.n_start = n_start


def _interpolate(be, xs, ys):
    return linalg.interpolate(xs, ys, be.zero, be.one)


def _find_relation(pb: _Problem):
    be = pb.be
    probe_points = (7919, 104729)
    for K in range(0, pb.Kmax + 1):
        ranks, data = [], []
        for n0 in probe_points:
            got = pb.columns(n0, K)
            if got is None:
                continue
            vecs, _ = got
            rows = [[vecs[k][r] for k in range(K + 1)] for r in range(pb.R)]
            ranks.append(be.rank(rows, K + 1))
            data.append(vecs)
        if not ranks or max(ranks) == K + 1:
            continue
        # choose K rows making the first K columns nonsingular
        piv = None
        for vecs in data:
            piv = be.pivot_rows(vecs[:K], pb.R)
            if piv is not None:
                break
        if piv is None:
            continue
        lam = _interpolate_relation(pb, K, piv)
        if lam is not None and _verify_relation(pb, K, lam):
            return K, lam
    raise ContractViolation(f"no relation found up to the guaranteed order {pb.Kmax}")


def _interpolate_relation(pb, K, piv):
    be = pb.be
    deltas = pb.deltas(K)
    need = sum(deltas) + 1
    xs, ys = [], [[] for _ in range(K + 1)]
    n0 = 0
    tries = 0
    while len(xs) < need:
        n0 += 1
        tries += 1
        if tries > 4 * need + 200:
            return None
        got = pb.columns(n0, K)
        if got is None:
            continue
        vecs, dens = got
        A = [[vecs[k][r] for k in range(K)] for r in piv]
        b = [-vecs[K][r] for r in piv]
        det, y = be.solve(A, b)
        if y is None:
            continue
        scale = det
        for d in dens:
            scale = scale * d
        xs.append(n0)
        for k in range(K):
            ys[k].append(y[k] * scale)
        ys[K].append(scale)
    lam = [_interpolate(be, xs, ys[k]) for k in range(K + 1)]
    return be.reduce_content(lam)


def _verify_relation(pb, K, lam):
    """sum lambda_k(n) v_k(n) == 0 identically, proven by enough evaluations."""
    be = pb.be
    deltas = pb.deltas(K)
    bound = max(p.degree for p in lam) + 2 * deltas[K] + 1
    conv = (lambda p: _Rational._poly(p)) if isinstance(be, _Rational) else (lambda p: p)
    lp = [conv(p) for p in lam]
    checked, n0 = 0, 0
    while checked < bound:
        n0 += 1
        if n0 > 4 * bound + 200:
            return False
        got = pb.columns(n0, K)
        if got is None:
            continue
        vecs, _ = got
        coef = [be.ev(p, n0) for p in lp]
        for r in range(pb.R):
            acc = be.zero
            for k in range(K + 1):
                acc = acc + coef[k] * vecs[k][r]
            if not be.is_zero(acc):
                return False
        checked += 1
    return True


def _assemble(K, lam, combined_terms, n_start, bound, label):
    if K > bound:
        raise ContractViolation(f"{label}: order {K} exceeds the bound {bound}")
    # sum_k lam_k(n) c(n + k) = 0  ->  P_i(m) = lam_{K - i}(m - K)
    coeffs = [lam[K - i].shift(-K) for i in range(K + 1)]
    return finalize(coeffs, combined_terms, n_start + K - 1)


def _check_terms(rec, expected, label):
    got = rec_eval(rec, len(expected))
    for n, (x, y) in enumerate(zip(got, expected), start=1):
        if x != y:
            raise ContractViolation(f"{label}: output disagrees with the inputs at n = {n}")


def _check_length(*recs, extra=0):
    return 2 * sum(r.order + r.max_degree for r in recs) + 50 + extra


def _pdeg(r):
    return max(c.degree for c in r.coeffs)


def rec_sum(a: PRecurrence, b: PRecurrence) -> PRecurrence:
    """Recurrence for n -> a(n) + b(n); order at most order(a) + order(b)."""
    be = _backend([a, b])
    s, t = a.order, b.order
    pa, pb_ = be.polys

    def columns(n, K):
        ua = _unroll(be, pa, s, n, K)
        ub = _unroll(be, pb_, t, n, K)
        if ua is None or ub is None:
            return None
        return [x + y for x, y in zip(ua[0], ub[0])], [x * y for x, y in zip(ua[1], ub[1])]

    dsum = _pdeg(a) + _pdeg(b)
    n_start = max(a.valid_from, b.valid_from, 1)
    prob = _Problem(be, s + t, s + t, columns, lambda K: [k * dsum for k in range(K + 1)], n_start)
    K, lam = _find_relation(prob)
    L = max(_check_length(a, b), n_start + K + 2 * (s + t) + 10)
    terms = [x + y for x, y in zip(rec_eval(a, L), rec_eval(b, L))]
    out = _assemble(K, lam, terms, n_start, s + t, "sum")
    _check_terms(out, terms, "sum")
    return out


def rec_product(a: PRecurrence, b: PRecurrence) -> PRecurrence:
    """Recurrence for n -> a(n) b(n); order at most order(a) * order(b)."""
    be = _backend([a, b])
    s, t = a.order, b.order
    pa, pb_ = be.polys

    def columns(n, K):
        ua = _unroll(be, pa, s, n, K)
        ub = _unroll(be, pb_, t, n, K)
        if ua is None or ub is None:
            return None
        return [_kron(x, y) for x, y in zip(ua[0], ub[0])], [x * y for x, y in zip(ua[1], ub[1])]

    dsum = _pdeg(a) + _pdeg(b)
    n_start = max(a.valid_from, b.valid_from, 1)
    prob = _Problem(be, s * t, s * t, columns, lambda K: [k * dsum for k in range(K + 1)], n_start)
    K, lam = _find_relation(prob)
    L = max(_check_length(a, b), n_start + K + 2 * s * t + 10)
    terms = [x * y for x, y in zip(rec_eval(a, L), rec_eval(b, L))]
    out = _assemble(K, lam, terms, n_start, s * t, "product")
    _check_terms(out, terms, "product")
    return out


def rec_section(a: PRecurrence, q: int, j: int) -> PRecurrence:
    """Recurrence for n -> a(q n + j), n >= 1; order at most order(a)."""
    if q < 1 or not 0 <= j < q:
        raise ValueError("need q >= 1 and 0 <= j < q")
    be = _backend([a])
    s = a.order
    (pa,) = be.polys

    def columns(n, K):
        u = _unroll(be, pa, s, q * n + j, q * K)
        if u is None:
            return None
        vecs, dens = u
        return [vecs[q * k] for k in range(K + 1)], [dens[q * k] for k in range(K + 1)]

    d = _pdeg(a)
    n_start = max(1, -(-(a.valid_from - j) // q))
    prob = _Problem(be, s, s, columns, lambda K: [q * k * d for k in range(K + 1)], n_start)
    K, lam = _find_relation(prob)
    L = max(_check_length(a), n_start + K + 2 * s + 10)
    full = rec_eval(a, q * L + j)
    terms = [full[q * n + j - 1] for n in range(1, L + 1)]
    out = _assemble(K, lam, terms, n_start, s, "section")
    _check_terms(out, terms, "section")
    return out
