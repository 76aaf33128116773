"""Exact dense linear algebra over fields (Fraction, Cyc, RatFunc).

Entries only need +, -, *, / and a zero test.  Integer matrices get a
fraction-free (Bareiss) determinant.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence


def _is_zero(x) -> bool:
    z = getattr(x, "is_zero", None)
    return z() if z is not None else x == 0


def row_echelon(rows: List[list], ncols: int):
    """In-place reduced row echelon form; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if not _is_zero(rows[i][c])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c] if not hasattr(rows[r][c], "inverse") else rows[r][c].inverse()
        rows[r] = [x * inv if not _is_zero(x) else x for x in rows[r]]
        for i in range(nrows):
            if i != r and not _is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [a - f * b if not _is_zero(b) else a for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def nullspace(matrix: Sequence[Sequence], ncols: int, zero, one) -> List[list]:
    """Basis of the right nullspace {x : M x = 0}."""
    rows = [list(r) for r in matrix]
    pivots = row_echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return basis


def rank(matrix: Sequence[Sequence], ncols: int) -> int:
    return len(row_echelon([list(r) for r in matrix], ncols))


def solve_square(matrix: Sequence[Sequence], rhs: Sequence):
    """Return (det, x) for M x = rhs, or (0, None) when M is singular."""
    n = len(matrix)
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    det = None
    for c in range(n):
        piv = next((i for i in range(c, n) if not _is_zero(rows[i][c])), None)
        if piv is None:
            return 0, None
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -rows[c][c] if det is None else -det * rows[c][c]
        else:
            det = rows[c][c] if det is None else det * rows[c][c]
        inv = 1 / rows[c][c] if not hasattr(rows[c][c], "inverse") else rows[c][c].inverse()
        pr = rows[c]
        for i in range(c + 1, n):
            f = rows[i][c]
            if not _is_zero(f):
                f = f * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
    x = [None] * n
    for i in range(n - 1, -1, -1):
        acc = rows[i][n]
        for j in range(i + 1, n):
            if not _is_zero(rows[i][j]):
                acc = acc - rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    return (det if det is not None else 1), x


def det(matrix: Sequence[Sequence]):
    n = len(matrix)
    if n == 0:
        return 1
    rows = [list(r) for r in matrix]
    result = None
    sign = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if not _is_zero(rows[i][c])), None)
        if piv is None:
            return rows[0][0] * 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        result = rows[c][c] if result is None else result * rows[c][c]
        inv = 1 / rows[c][c] if not hasattr(rows[c][c], "inverse") else rows[c][c].inverse()
        for i in range(c + 1, n):
            f = rows[i][c]
            if not _is_zero(f):
                f = f * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return result if sign == 1 else -result


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    a = [list(r) for r in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def interpolate(xs: Sequence[int], ys: Sequence, zero, one) -> list:
    """Coefficients (low first) of the polynomial through (xs[i], ys[i]), Newton form."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form into monomial basis
    poly = [zero] * n
    poly[0] = coef[n - 1]
    deg = 0
    for k in range(n - 2, -1, -1):
        # poly = poly * (x - xs[k]) + coef[k]
        new = [zero] * n
        for i in range(deg + 1):
            if i + 1 < n:
                new[i + 1] = new[i + 1] + poly[i]
            new[i] = new[i] - poly[i] * xs[k]
        new[0] = new[0] + coef[k]
        poly = new
        deg += 1
    return poly


def cyclotomic_kernel_vector(rows: Sequence[Sequence], ncols: int):
    """One nonzero x with M x = 0 for a matrix of Cyc entries, or None.

    Each entry becomes its phi(m) x phi(m) multiplication matrix on the power
    basis of Q(zeta_m); the resulting rational system is reduced by flint.
    Its kernel is the K-kernel read as a Q-space, so any nonzero rational
    kernel vector regroups into a K-kernel vector.
    """
    import flint
    from math import lcm

    from .exactnum import Cyc, euler_phi, zeta

    m = lcm(1, *(x.order for r in rows for x in r))
    w = euler_phi(m)
    z = zeta(m)
    blocks = {}

    def block(x):
        key = (x.order, x.numerators, x.denominator)
        if key not in blocks:
            cols, y = [], x
            for _ in range(w):
                cols.append([flint.fmpq(v, y.denominator) for v in y.lift(m)])
                y = y * z
            blocks[key] = cols
        return blocks[key]

    nr, nc = len(rows) * w, ncols * w
    M = flint.fmpq_mat(nr, nc)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if x.is_zero():
                continue
            cols = block(x)
            for b in range(w):
                for a in range(w):
                    v = cols[b][a]
                    if v != 0:
                        M[i * w + a, j * w + b] = v
    R, rk = M.rref()
    if rk == nc:
        return None
    piv, c = [], 0
    for i in range(rk):
        while R[i, c] == 0:
            c += 1
        piv.append(c)
        c += 1
    pset = set(piv)
    free = next(j for j in range(nc) if j not in pset)
    vec = [flint.fmpq(0)] * nc
    vec[free] = flint.fmpq(1)
    for i, p in enumerate(piv):
        vec[p] = -R[i, free]
    out = []
    for j in range(ncols):
        coords = [vec[j * w + a] for a in range(w)]
        out.append(Cyc.make(m, [Fraction(int(q.p), int(q.q)) for q in coords]))
    return out
