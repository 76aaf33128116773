"""P-recursive sequences: sum_{i=0}^{d} P_i(n) f(n - i) = 0 for n > valid_from."""
from __future__ import annotations

import json
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

import flint

from ..errors import InputError, StructuralError
from ..exactnum import ZERO, Cyc, UniPoly, cyc, euler_phi


class IllPosedRecurrence(InputError):
    pass


def _coordinate_polys(p: UniPoly) -> list:
    """Split p into rational polynomials Q_j with p = sum_j zeta_L^j Q_j."""
    if p.is_rational():
        num, den = [c.numerators[0] for c in p.coeffs], [c.denominator for c in p.coeffs]
        return [flint.fmpq_poly([flint.fmpq(a, b) for a, b in zip(num, den)])]
    L = lcm(*(c.order for c in p.coeffs))
    width = euler_phi(L)
    cols = [[flint.fmpq(0)] * len(p.coeffs) for _ in range(width)]
    for i, c in enumerate(p.coeffs):
        for j, a in enumerate(c.lift(L)):
            cols[j][i] = flint.fmpq(a, c.denominator)
    return [flint.fmpq_poly(col) for col in cols]


def integer_roots(p: UniPoly) -> list:
    """Sorted integer roots of a nonzero polynomial with cyclotomic coefficients."""
    if p.is_zero():
        raise ValueError("the zero polynomial has every integer as a root")
    g = None
    for q in _coordinate_polys(p):
        if q.is_zero():
            continue
        g = q if g is None else g.gcd(q)
    if g is None or g.degree() < 1:
        return []
    roots = []
    for r, _mult in g.roots():
        if r.q == 1:
            roots.append(int(r.p))
    return sorted(roots)


def largest_integer_root(p: UniPoly) -> Optional[int]:
    r = integer_roots(p)
    return r[-1] if r else None


class PRecurrence:
    """Linear recurrence with polynomial coefficients plus initial values.

    ``coeffs[i]`` is P_i; ``initial`` holds f(1), f(2), ... and must cover
    at least 1..valid_from.  Longer initial lists are used verbatim.
    """

    __slots__ = ("coeffs", "valid_from", "initial")

    def __init__(self, coeffs: Sequence, valid_from: int, initial: Sequence, check: bool = True):
        self.coeffs = tuple(c if isinstance(c, UniPoly) else UniPoly(c) for c in coeffs)
        self.valid_from = int(valid_from)
        self.initial = tuple(cyc(v) for v in initial)
        if check:
            self.validate()

    def validate(self):
        if not self.coeffs:
            raise StructuralError("a recurrence needs at least P_0")
        if self.coeffs[0].is_zero():
            raise StructuralError("P_0 must not vanish identically")
        if self.coeffs[-1].is_zero():
            raise StructuralError("P_d must not vanish identically")
        if self.valid_from < self.order:
            raise StructuralError(f"valid_from = {self.valid_from} is below the order {self.order}")
        if len(self.initial) < self.valid_from:
            raise StructuralError(f"need initial terms f(1..{self.valid_from}), got {len(self.initial)}")
        r = largest_integer_root(self.coeffs[0])
        if r is not None and r > self.valid_from:
            raise IllPosedRecurrence(f"P_0 vanishes at n = {r} > valid_from = {self.valid_from}")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def max_degree(self) -> int:
        return max(c.degree for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs) and all(v.is_rational() for v in self.initial)

    def terms(self, N: int) -> list:
        return rec_eval(self, N)

    def __repr__(self):
        body = ", ".join(f"P{i}={c!r}" for i, c in enumerate(self.coeffs))
        return f"PRecurrence({body}; valid_from={self.valid_from})"

    # -- text format -----------------------------------------------------
    def to_text(self) -> str:
        lines = [f"valid_from: {self.valid_from}"]
        for i, c in enumerate(self.coeffs):
            lines.append(f"P_{i}: " + json.dumps(c.to_json()))
        lines.append("initial: " + json.dumps([v.to_json() for v in self.initial]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PRecurrence":
        valid_from, polys, initial = None, {}, None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, rest = line.partition(":")
            if not sep:
                raise StructuralError(f"line {lineno}: expected 'key: value'")
            key = key.strip()
            try:
                if key == "valid_from":
                    valid_from = int(rest)
                elif key.startswith("P_"):
                    polys[int(key[2:])] = UniPoly.from_json(json.loads(rest))
                elif key == "initial":
                    initial = [Cyc.from_json(v) for v in json.loads(rest)]
                else:
                    raise StructuralError(f"unknown key {key!r}")
            except (ValueError, TypeError, KeyError) as exc:
                raise StructuralError(f"line {lineno}: {exc}") from None
        if valid_from is None or initial is None or not polys:
            raise StructuralError("recurrence text needs valid_from, P_0.. and initial lines")
        if sorted(polys) != list(range(len(polys))):
            raise StructuralError("coefficient indices must be 0..d without gaps")
        return cls([polys[i] for i in range(len(polys))], valid_from, initial)


def rec_eval(rec: PRecurrence, N: int) -> list:
    """f(1..N) as a list (index i holds f(i + 1))."""
    if N < 1:
        raise ValueError("N must be >= 1")
    out = list(rec.initial[:N])
    d = rec.order
    if rec.is_rational():
        # exact rational fast path
        vals = [v.to_fraction() for v in out]
        forms = []
        for c in rec.coeffs:
            num = [x.numerators[0] * (lcm(*(y.denominator for y in c.coeffs)) // x.denominator) for x in c.coeffs]
            forms.append((num, lcm(*(y.denominator for y in c.coeffs))))
        def ev(form, n):
            acc = 0
            for a in reversed(form[0]):
                acc = acc * n + a
            return Fraction(acc, form[1])
        for n in range(len(vals) + 1, N + 1):
            p0 = ev(forms[0], n)
            if p0 == 0:
                raise IllPosedRecurrence(f"P_0({n}) = 0 while unrolling")
            s = Fraction(0)
            for i in range(1, d + 1):
                fi = vals[n - i - 1]
                if fi:
                    s += ev(forms[i], n) * fi
            vals.append(-s / p0)
        return [Cyc.from_rational(v) for v in vals]
    for n in range(len(out) + 1, N + 1):
        p0 = rec.coeffs[0].eval_int(n)
        if p0.is_zero():
            raise IllPosedRecurrence(f"P_0({n}) = 0 while unrolling")
        s = ZERO
        for i in range(1, d + 1):
            fi = out[n - i - 1]
            if not fi.is_zero():
                s = s + rec.coeffs[i].eval_int(n) * fi
        out.append(-s / p0)
    return out


def relation_residual(coeffs: Sequence[UniPoly], terms: Sequence, n: int) -> Cyc:
    """sum_i P_i(n) f(n - i) using f from ``terms`` (index i is f(i + 1))."""
    acc = ZERO
    for i, c in enumerate(coeffs):
        v = terms[n - i - 1]
        if not v.is_zero():
            acc = acc + c.eval_int(n) * v
    return acc


def finalize(coeffs: Sequence[UniPoly], terms: Sequence, min_valid: int) -> PRecurrence:
    """Attach valid_from and initial terms to a relation known to hold for n > min_valid.

    valid_from is pushed up past every integer root of P_0 and lowered as far
    as the supplied terms allow (down to the order).
    """
    coeffs = list(coeffs)
    d = len(coeffs) - 1
    root = largest_integer_root(coeffs[0])
    floor = max(d, root if root is not None else d)
    vf = max(floor, min_valid)
    while vf > floor and vf <= len(terms) and relation_residual(coeffs, terms, vf).is_zero():
        vf -= 1
    if vf > len(terms):
        raise InputError(f"need {vf} terms to seed the recurrence, have {len(terms)}")
    return PRecurrence(coeffs, vf, list(terms[:vf]))
