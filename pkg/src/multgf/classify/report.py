"""The dichotomy pipeline and its report."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import ContractViolation, MultiplicativityViolation
from ..exactnum import UniPoly
from ..multfun import SarkozyForm, mf_is_multiplicative_scan
from ..ratrec import RationalFunction, TruncatedSeries, pade_reconstruct, poles_at_roots_of_unity, sarkozy_series
from .budget import SearchBudget
from .growth import growth_check_arch, growth_check_padic
from .search import (TranscendenceWitness, _values, detect_eventually_zero, detect_sarkozy,
                     transcendence_witness)
from .verify import refute_cell, verify_witness

VERDICTS = ("rational", "dfinite", "eventually_zero", "transcendental_witness", "inconclusive")
GROWTH_TERMS = 2000


@dataclass
class ClassificationReport:
    verdict: str
    form: Optional[SarkozyForm] = None
    rational_function: Optional[RationalFunction] = None
    threshold: Optional[int] = None
    witness: Optional[TranscendenceWitness] = None
    reason: str = ""
    diagnostics: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"verdict": self.verdict}
        if self.form is not None:
            out["k"] = self.form.k
            out["chi"] = self.form.chi.to_json()
        if self.rational_function is not None:
            out["rational_function"] = self.rational_function.to_json()
        if self.threshold is not None:
            out["threshold"] = self.threshold
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.reason:
            out["reason"] = self.reason
        out["diagnostics"] = self.diagnostics
        return out


def _sparse_identity(form: SarkozyForm, vals) -> RationalFunction:
    """Numerator of (1 - z^M)^(k+1) F(z), checked to vanish past its degree on every scanned term."""
    M, e = form.chi.period, form.k + 1
    B = UniPoly([1] + [0] * (M - 1) + [-1]) ** e
    taps = [(i, c) for i, c in enumerate(B.coeffs) if not c.is_zero()]
    deg = M * e
    full = [None] + list(vals)
    numer = []
    for n in range(len(full)):
        acc = None
        for i, c in taps:
            if i > n:
                break
            if n - i == 0:
                continue
            t = full[n - i] * c
            acc = t if acc is None else acc + t
        if n <= deg:
            numer.append(acc if acc is not None else 0)
        elif acc is not None and not acc.is_zero():
            raise ContractViolation(f"closed form disagrees with the data at z^{n}")
    return RationalFunction(UniPoly(numer), B)


def _growth(vals) -> dict:
    head = vals[:GROWTH_TERMS]
    out = {"archimedean": growth_check_arch(head).to_json()}
    if all(v.is_rational() for v in head):
        out["2-adic"] = growth_check_padic(head, 2).to_json()
    return out


def classify(f, budget: Optional[SearchBudget] = None) -> ClassificationReport:
    """Rational (n^k chi(n)), eventually zero, a bounded transcendence witness, or inconclusive."""
    budget = budget or SearchBudget()
    N = budget.terms
    vals = _values(f, N)
    bad = mf_is_multiplicative_scan(vals)
    if bad is not None:
        a, b = bad
        raise MultiplicativityViolation(bad, f"f({a * b}) != f({a}) f({b})" if a > 1 else "f(1) != 1")
    diag = {"budget": budget.to_json(), "scanned": [1, N], "growth": _growth(vals)}

    n0 = detect_eventually_zero(f, budget, vals)
    if n0 is not None:
        rf = RationalFunction(UniPoly([0] + vals[:n0]), UniPoly([1]))
        return ClassificationReport("eventually_zero", rational_function=rf, threshold=n0, diagnostics=diag)

    form = detect_sarkozy(f, budget, vals)
    if form is not None:
        M = form.chi.period
        sample = [(n, vals[n - 1]) for n in range(2, min(N, 200) + 1)]
        if refute_cell(sample, form.k, M) is not None:
            raise ContractViolation(f"detected form (k={form.k}, M={M}) is refuted by the witness rules")
        if form.k < 0:
            return ClassificationReport("dfinite", form=form, diagnostics=diag)
        rf = sarkozy_series(form)
        if _sparse_identity(form, vals) != rf:
            raise ContractViolation("closed form does not reproduce the scanned terms")
        need = max(rf.numer.degree, 0) + rf.denom.degree + 2 + 20
        if need <= N:
            pade = pade_reconstruct(TruncatedSeries(vals[:need]), max(rf.numer.degree, 0), rf.denom.degree)
            if pade != rf:
                raise ContractViolation("Pade reconstruction disagrees with the closed form")
            diag["pade_terms"] = need
        cert = poles_at_roots_of_unity(rf)
        if not cert.ok:
            raise ContractViolation("closed form has a pole off the roots of unity")
        diag["poles"] = [list(t) for t in cert.factors]
        return ClassificationReport("rational", form=form, rational_function=rf, diagnostics=diag)

    w = transcendence_witness(f, budget)
    if w is not None:
        missed = verify_witness(w)
        if missed:
            raise ContractViolation(f"witness leaves cells unrefuted: {missed[:5]}")
        diag["witness_verified_cells"] = len(w.reasons)
        return ClassificationReport("transcendental_witness", witness=w, diagnostics=diag)

    ks = f"{-budget.k_max if budget.dfinite else 0}..{budget.k_max}"
    reason = (f"no form n^k chi(n) with k in {ks}, period <= {budget.period_max} on {N} terms, and no "
              f"witness among primes <= {budget.witness_prime_cap}")
    return ClassificationReport("inconclusive", reason=reason, diagnostics=diag)
