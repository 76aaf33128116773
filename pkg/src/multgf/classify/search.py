"""Detection of n^k chi(n), eventual vanishing and transcendence witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Optional

from ..errors import InconsistentInputError, InputError
from ..exactnum import Cyc, cyc, cyc_is_root_of_unity, euler_phi
from ..multfun import SarkozyForm, periodic_make
from ..multfun.arith import is_prime, primes_up_to
from .budget import SearchBudget

STAGE_WINDOW = 200   # primes above period_max tried by the single-prime stages


def _values(f, N):
    if callable(getattr(f, "values", None)):
        return [cyc(v) for v in f.values(N)]
    return [cyc(f(n)) for n in range(1, N + 1)]


def _plain(vals):
    """Fractions when every value is rational, else None."""
    if all(v.order == 1 for v in vals):
        return [Fraction(v.numerators[0], v.denominator) for v in vals]
    return None


def _pow(n, k):
    return n**k if k >= 0 else Fraction(1, n ** (-k))


def detect_eventually_zero(f, budget: SearchBudget, values=None) -> Optional[int]:
    """Least n0 with f(n) = 0 on (n0, terms], backed by f(p^e) = 0 for primes p > n0.

    n0 must sit in the first half of the scanned range, so that the zero tail
    is actually observed rather than assumed.
    """
    N = budget.terms
    vals = values if values is not None else _values(f, N)
    n0 = 0
    for n in range(len(vals), 0, -1):
        if not vals[n - 1].is_zero():
            n0 = n
            break
    if n0 == 0 or n0 > N // 2:
        return None
    for p in primes_up_to(N):
        if p <= n0:
            continue
        q = p
        while q <= N:
            if not vals[q - 1].is_zero():
                return None
            q *= p
    return n0


def _fit_cell(vals, plain, k, M):
    """chi values for residues 1..M if f(n) = n^k chi(n mod M) on the whole table."""
    chi = [None] * M
    if plain is not None:
        for n, v in enumerate(plain, start=1):
            r = n % M
            if chi[r] is None:
                chi[r] = v / _pow(n, k)
            elif v != chi[r] * _pow(n, k):
                return None
        return [Cyc.from_rational(chi[a % M]) for a in range(1, M + 1)]
    for n, v in enumerate(vals, start=1):
        r = n % M
        s = _pow(n, k)
        if chi[r] is None:
            chi[r] = v * (Fraction(1) / s)
        elif v != chi[r] * s:
            return None
    return [chi[a % M] for a in range(1, M + 1)]


def detect_sarkozy(f, budget: SearchBudget, values=None) -> Optional[SarkozyForm]:
    """Least (M, k) with f(n) = n^k chi(n) on [1, terms] for a valid periodic multiplicative chi."""
    vals = values if values is not None else _values(f, budget.terms)
    plain = _plain(vals)
    for M in range(1, budget.period_max + 1):
        for k in budget.exponents:
            chi_vals = _fit_cell(vals, plain, k, M)
            if chi_vals is None:
                continue
            try:
                chi = periodic_make(M, chi_vals)
            except InputError:
                continue
            return SarkozyForm(k, chi, dfinite=k < 0)
    return None


def declension_check(f: Callable, form: SarkozyForm, n0: int, budget: SearchBudget) -> bool:
    """Check the form on [1, n0]; a failure there means f was not multiplicative.

    For a bad n, the contradiction is exhibited by a prime p > n0 with
    chi(p) != 0 and f(p n) != f(p) f(n).
    """
    for n in range(1, n0 + 1):
        if cyc(f(n)) == form(n):
            continue
        fn = cyc(f(n))
        witness = {"n": n, "f(n)": fn.to_json(), "form(n)": form(n).to_json()}
        p = n0 + 1
        while p * n <= max(budget.terms, (n0 + 2) * n):
            if is_prime(p) and not form.chi(p).is_zero():
                lhs, rhs = cyc(f(p * n)), cyc(f(p)) * fn
                if lhs != rhs:
                    witness.update({"p": p, "f(pn)": lhs.to_json(), "f(p)f(n)": rhs.to_json()})
                    raise InconsistentInputError(
                        f"form fails at n={n}; p={p}: f({p * n})={lhs!r} != f({p})f({n})={rhs!r}", witness)
            p += 1
        raise InconsistentInputError(f"form fails at n={n} although it holds beyond n0={n0}", witness)
    return True


@dataclass
class TranscendenceWitness:
    evaluations: list                   # [(n, f(n))], sorted by n
    k_max: int
    period_max: int
    dfinite: bool = False
    stage: str = ""
    reasons: list = field(default_factory=list)   # [(k, M, rule, [n...])]

    def to_json(self) -> dict:
        return {
            "evaluations": [[n, v.to_json()] for n, v in self.evaluations],
            "k_max": self.k_max, "period_max": self.period_max, "dfinite": self.dfinite,
            "stage": self.stage,
            "reasons": [{"k": k, "M": M, "rule": rule, "n": ns} for k, M, rule, ns in self.reasons],
        }

    @classmethod
    def from_json(cls, obj) -> "TranscendenceWitness":
        return cls([(int(n), Cyc.from_json(v)) for n, v in obj["evaluations"]], int(obj["k_max"]),
                   int(obj["period_max"]), bool(obj.get("dfinite", False)), obj.get("stage", ""),
                   [(r["k"], r["M"], r["rule"], r["n"]) for r in obj.get("reasons", [])])


class _Evaluator:
    """Cached f on primes and prime squares; None once a value is out of reach."""

    def __init__(self, f):
        self.f = f
        self.cache = {}

    def __call__(self, n, p=None, e=1):
        if n not in self.cache:
            try:
                if p is not None and hasattr(self.f, "at_prime_power"):
                    v = self.f.at_prime_power(p, e)
                else:
                    v = self.f(n)
                self.cache[n] = cyc(v)
            except (LookupError, InputError):
                self.cache[n] = None
        return self.cache[n]


def _ratio(v: Cyc, n: int, k: int):
    if v.order == 1:
        return Fraction(v.numerators[0], v.denominator) / _pow(n, k)
    return v * (Fraction(1) / _pow(n, k))


def _unit_order(w) -> Optional[int]:
    """Multiplicative order of w if it is a root of unity."""
    if isinstance(w, Fraction):
        return 1 if w == 1 else 2 if w == -1 else None
    return cyc_is_root_of_unity(w)


class _Cells:
    """Search-side bookkeeping of refuted (k, M) cells."""

    def __init__(self, budget):
        self.ks = budget.exponents
        self.Ms = range(1, budget.period_max + 1)
        self.phi = {M: euler_phi(M) for M in self.Ms}

    def unit_refutes(self, w, M) -> bool:
        o = _unit_order(w)
        return o is None or self.phi[M] % o != 0


def transcendence_witness(f, budget: SearchBudget) -> Optional[TranscendenceWitness]:
    """Finite evaluations ruling out every n^k chi(n) with |k| <= k_max, M <= period_max."""
    ev = _Evaluator(f)
    cells = _Cells(budget)
    P = budget.period_max
    cap = budget.witness_prime_cap
    primes = primes_up_to(cap)
    window = [p for p in primes if p > P][:STAGE_WINDOW]
    phis = sorted(set(cells.phi.values()))

    def mk(ns, stage):
        evs = sorted((n, ev(n)) for n in set(ns))
        return TranscendenceWitness(evs, budget.k_max, P, budget.dfinite, stage)

    # single prime p > period_max: f(p) / p^k is never a root of unity of admissible order
    for p in window:
        v = ev(p, p)
        if v is None:
            break
        if all(_unit_order(_ratio(v, p, k)) is None
               or all(e % _unit_order(_ratio(v, p, k)) for e in phis) for k in cells.ks):
            return _finish(mk([p], "single-prime"), cells)
    # f(p^2) != f(p)^2 contradicts complete multiplicativity of chi off M
    for p in window:
        v, v2 = ev(p, p), ev(p * p, p, 2)
        if v is None or v2 is None:
            break
        if v2 != v * v:
            return _finish(mk([p, p * p], "prime-square"), cells)
    # p = 1 mod lcm(1..period_max): chi(p) = chi(1) = 1 for every admissible M
    L = lcm(*range(1, P + 1))
    q = L + 1
    while q <= cap:
        if is_prime(q):
            v, v2 = ev(q, q), ev(q * q, q, 2)
            if v is not None and v2 is not None:
                if all(_ratio(v, q, k) != 1 for k in cells.ks) or v2 != v * v:
                    return _finish(mk([q, q * q], "progression-prime"), cells)
        q += L
    return _per_cell(ev, cells, primes, mk)


def _per_cell(ev, cells, primes, mk):
    """Refute the cells one at a time, reusing evaluations already gathered."""
    chosen = set()

    def refuted_by_chosen(k, M):
        seen = {1 % M: (1, 1)}
        for n in sorted(chosen):
            if gcd(n, M) != 1 or ev(n) is None:
                continue
            w = _ratio(ev(n), n, k)
            if cells.unit_refutes(w, M):
                return True
            r = n % M
            if r in seen and seen[r][1] != w:
                return True
            seen.setdefault(r, (n, w))
        return False

    for M in cells.Ms:
        for k in cells.ks:
            if refuted_by_chosen(k, M):
                continue
            found = None
            seen = {1 % M: (1, 1)}
            for p in primes:
                if M % p == 0:
                    continue
                v = ev(p, p)
                if v is None:
                    break
                w = _ratio(v, p, k)
                r = p % M
                if cells.unit_refutes(w, M):
                    found = [p]
                elif r in seen and seen[r][1] != w:
                    found = [n for n in (seen[r][0], p) if n > 1]
                else:
                    v2 = ev(p * p, p, 2)
                    if v2 is not None and v2 != v * v:
                        found = [p, p * p]
                if found:
                    break
                seen.setdefault(r, (p, w))
            if found is None:
                return None
            chosen.update(found)
    return _finish(mk(sorted(chosen), "per-cell"), cells)


def _finish(w: TranscendenceWitness, cells) -> TranscendenceWitness:
    from .verify import refute_cell

    for M in cells.Ms:
        for k in cells.ks:
            why = refute_cell(w.evaluations, k, M)
            if why is not None:
                w.reasons.append((k, M, why["rule"], why["n"]))
    return w
