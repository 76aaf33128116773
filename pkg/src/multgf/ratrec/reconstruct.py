"""Rational reconstruction, cyclotomic denominators, closed forms and sections."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, lcm
from typing import Optional, Sequence, Union

from ..errors import ContractViolation, ReconstructionError
from ..exactnum import ZERO, UniPoly, cyc, cyclotomic_poly, euler_phi, poly_gcd, zeta
from .. import linalg
from .series import RationalFunction, TruncatedSeries

PADE_MARGIN = 20


def pade_reconstruct(s: Union[TruncatedSeries, Sequence], degA_max: int, degB_max: int,
                     margin: int = PADE_MARGIN) -> Optional[RationalFunction]:
    """The rational A/B (deg A <= degA_max, deg B <= degB_max) matching all terms, or None.

    A ``TruncatedSeries`` stands for 0 + f(1) z + ... ; a plain list is read
    as coefficients from z^0.  The result is in lowest terms, so its degrees
    are the least possible.
    """
    c = s.full() if isinstance(s, TruncatedSeries) else [cyc(x) for x in s]
    N = len(c) - 1 if isinstance(s, TruncatedSeries) else len(c)
    need = degA_max + degB_max + 2 + margin
    if N < need:
        raise ReconstructionError(f"pade_reconstruct needs at least {need} terms, got {N}")
    get = lambda n: c[n] if 0 <= n < len(c) else ZERO
    rows = []
    for n in range(degA_max + 1, degA_max + degB_max + margin + 1):
        rows.append([get(n - i) for i in range(degB_max + 1)])
    b = linalg.cyclotomic_kernel_vector(rows, degB_max + 1)
    if b is None:
        return None
    B = UniPoly(b)
    prod = [ZERO] * (degA_max + 1)
    for n in range(degA_max + 1):
        acc = ZERO
        for i in range(min(n, degB_max) + 1):
            if not b[i].is_zero():
                acc = acc + b[i] * get(n - i)
        prod[n] = acc
    A = UniPoly(prod)
    try:
        rf = RationalFunction(A, B)
    except ValueError:
        return None
    if rf.coefficients(len(c)) != list(c):
        return None
    return rf


def degree_bounds(eq, d: int) -> tuple:
    """(deg A bound, deg B bound) for a rational solution of eq over a degree-d field."""
    if d < 1:
        raise ValueError("field degree must be >= 1")
    polys = eq.coeffs if hasattr(eq, "coeffs") else eq
    r = len(polys) - 1
    degs = [max(p.degree, 0) for p in polys]
    df = factorial(d)
    return max(degs[:r]) + (r * df - 1) * degs[r], df * degs[r]


def universal_denominator(D: int) -> UniPoly:
    """prod over d with phi(d) <= D of Phi_d^D; divisible by every degree-<=D root-of-unity polynomial."""
    if D < 0:
        raise ValueError("D must be >= 0")
    C = UniPoly([1])
    if D == 0:
        return C
    for d in range(1, 2 * D * D + 3):
        if euler_phi(d) <= D:
            C = C * cyclotomic_poly(d) ** D
    return C


@dataclass
class PoleCertificate:
    ok: bool
    factors: list = field(default_factory=list)   # (d, degree removed) pairs
    remainder: UniPoly = None


def poles_at_roots_of_unity(r: RationalFunction) -> PoleCertificate:
    """Split the denominator into cyclotomic parts; ok iff nothing else remains."""
    B = r.denom
    m = lcm(1, *(c.order for c in B.coeffs))
    limit = max(B.degree, 0) * euler_phi(m)
    factors = []
    rest = B
    # phi(d) >= sqrt(d / 2), so d <= 2 limit^2 covers every candidate
    for d in range(1, 2 * limit * limit + 3):
        if rest.degree <= 0:
            break
        if euler_phi(d) > limit:
            continue
        phi_d = cyclotomic_poly(d)
        removed = 0
        while rest.degree > 0:
            g = poly_gcd(rest, phi_d)
            if g.degree < 1:
                break
            rest = rest.exact_div(g)
            removed += g.degree
        if removed:
            factors.append((d, removed))
    return PoleCertificate(rest.degree <= 0, factors, rest.monic() if not rest.is_zero() else rest)


def sarkozy_series(form) -> RationalFunction:
    """Closed form of sum_{n>=1} n^k chi(n) z^n."""
    k, chi = form.k, form.chi
    if k < 0:
        raise ValueError("negative k has no rational generating function")
    M = chi.period
    num = UniPoly([ZERO] + [chi(a) for a in range(1, M + 1)])
    e = 1
    base = UniPoly([1] + [0] * (M - 1) + [-1])  # 1 - z^M
    zM = UniPoly.monomial(M, M)
    for _ in range(k):
        # theta(P / base^e) = (z P' base + e M z^M P) / base^(e+1)
        num = (num.derivative().mul_shift(1)) * base + zM * num * e
        e += 1
    return RationalFunction(num, base**e)


def multisection(g, N: int, j: int):
    """G_j with G_j(z) having coefficients g(N n + j).

    Rational input uses z^j G_j(z^N) = (1/N) sum_k zeta_N^{-kj} G(zeta_N^k z).
    Lists are read as coefficients from z^0; a TruncatedSeries as 0, f(1), ...
    """
    if N < 1 or not 0 <= j < N:
        raise ValueError("need N >= 1 and 0 <= j < N")
    if isinstance(g, TruncatedSeries):
        return g.full()[j::N]
    if not isinstance(g, RationalFunction):
        return [cyc(x) for x in g][j::N]
    A, B = g.numer, g.denom
    H = UniPoly([1])
    for l in range(1, N):
        H = H * B.scale_var(zeta(N, l))
    C = B * H
    P = A * H
    total = UniPoly()
    for kk in range(N):
        total = total + P.scale_var(zeta(N, kk)) * zeta(N, -kk * j)
    total = total * Fraction(1, N)
    for i, c in enumerate(total.coeffs):
        if not c.is_zero() and i % N != j:
            raise ContractViolation("averaged numerator is not supported on the residue class")
    for i, c in enumerate(C.coeffs):
        if not c.is_zero() and i % N:
            raise ContractViolation("norm denominator is not a polynomial in z^N")
    num = UniPoly(total.coeffs[j::N])
    den = UniPoly(C.coeffs[0::N])
    out = RationalFunction(num, den)
    terms = 300
    want = g.coefficients(N * terms + j + 1)[j::N][:terms]
    if out.coefficients(terms) != want:
        raise ContractViolation("multisection does not re-expand to the sectioned series")
    return out


def rec_from_rational(rf: RationalFunction):
    """Constant-coefficient recurrence for f(n) = [z^n] A/B, n >= 1."""
    from ..holonomic.recurrence import finalize

    B = rf.denom
    coeffs = [UniPoly([c]) for c in B.coeffs]
    min_valid = max(rf.numer.degree, B.degree, 0)
    terms = rf.coefficients(min_valid + 3 * B.degree + 10)[1:]
    return finalize(coeffs, terms, min_valid)
