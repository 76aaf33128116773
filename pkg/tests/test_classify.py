from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multgf.errors import InconsistentInputError, MultiplicativityViolation
from multgf.exactnum import cyc
from multgf.multfun import SarkozyForm, list_dirichlet_characters, mf_builtin, periodic_make, prime_power_table
from multgf.ratrec import RationalFunction
from multgf.exactnum import UniPoly
from multgf.classify import (SearchBudget, TranscendenceWitness, classify, declension_check, detect_eventually_zero,
                             detect_sarkozy, growth_check_arch, growth_check_padic, padic_valuation, refute_cell,
                             transcendence_witness, verify_witness)

from conftest import grid_oracle

SMALL = SearchBudget(terms=600, k_max=4, period_max=12)
CHI4 = periodic_make(4, [1, 0, -1, 0])


def test_budget():
    b = SearchBudget()
    assert (b.k_max, b.period_max, b.witness_prime_cap) == (8, 60, 10**6)
    assert b.terms == 4 * 60**2 and "5000" in b.notice
    raised = SearchBudget(terms=100, period_max=10)
    assert raised.terms == 400 and "raised" in raised.notice
    assert SearchBudget(k_max=2, dfinite=True).exponents == [0, 1, 2, -1, -2]
    with pytest.raises(ValueError):
        SearchBudget(k_max=0)


def test_eventually_zero_examples():
    point = mf_builtin("point_support")
    assert detect_eventually_zero(point, SMALL) == 1
    assert detect_eventually_zero(mf_builtin("phi"), SMALL) is None
    assert detect_eventually_zero(mf_builtin("mu"), SMALL) is None


def test_sarkozy_examples():
    form = detect_sarkozy(mf_builtin("n_pow_k", k=1), SMALL)
    assert form.k == 1 and form.chi.period == 1
    form = detect_sarkozy(CHI4, SMALL)
    assert form.k == 0 and form.chi == CHI4
    assert detect_sarkozy(mf_builtin("phi"), SearchBudget(terms=400, k_max=3, period_max=10)) is None


def test_sarkozy_dfinite():
    f = mf_builtin("n_pow_k", k=-2)
    assert detect_sarkozy(f, SMALL) is None
    form = detect_sarkozy(f, SearchBudget(terms=600, k_max=3, period_max=12, dfinite=True))
    assert form.k == -2


def test_declension_examples():
    ident = mf_builtin("n_pow_k", k=1)
    one = periodic_make(1, [1])
    assert declension_check(ident, SarkozyForm(1, one), 10, SMALL)
    table = lambda n: 5 if n == 2 else n
    with pytest.raises(InconsistentInputError) as exc:
        declension_check(table, SarkozyForm(1, one), 2, SMALL)
    w = exc.value.witness
    assert (w["n"], w["p"]) == (2, 3) and w["f(pn)"] == cyc(6).to_json() and w["f(p)f(n)"] == cyc(15).to_json()
    chi3 = list_dirichlet_characters(3)[1]
    assert declension_check(chi3, SarkozyForm(0, chi3), 3, SMALL)


def test_witness_phi():
    b = SearchBudget(k_max=6, period_max=30, witness_prime_cap=10**4)
    w = transcendence_witness(mf_builtin("phi"), b)
    assert w.evaluations == [(31, 30)]
    assert verify_witness(w) == [] and grid_oracle(w) == []


def test_witness_liouville():
    b = SearchBudget(k_max=4, period_max=6, witness_prime_cap=10**4)
    w = transcendence_witness(mf_builtin("liouville"), b)
    assert w.evaluations == [(61, -1), (3721, 1)]
    assert verify_witness(w) == [] and grid_oracle(w) == []


def test_witness_absent_for_sarkozy_forms():
    assert transcendence_witness(mf_builtin("one"), SMALL) is None
    assert transcendence_witness(CHI4, SMALL) is None


@pytest.mark.parametrize("name", ["phi", "tau", "sigma", "mu", "liouville", "rho", "tau_sq", "tau_of_square"])
def test_corpus_witnesses_pass_both_verifiers(name):
    w = transcendence_witness(mf_builtin(name), SearchBudget())
    assert w is not None
    assert verify_witness(w) == []
    assert grid_oracle(w) == []
    again = TranscendenceWitness.from_json(w.to_json())
    assert again == w


def test_tampered_witness_is_rejected():
    w = transcendence_witness(mf_builtin("liouville"), SearchBudget(k_max=4, period_max=6, witness_prime_cap=10**4))
    forged = TranscendenceWitness([(61, cyc(61)), (3721, cyc(3721))], w.k_max, w.period_max)
    left = verify_witness(forged)
    assert (1, 1) in left and (1, 60 if w.period_max >= 60 else 1) in left
    assert sorted(left) == sorted(grid_oracle(forged))


def test_refute_cell_rules():
    ev = [(3, cyc(2))]
    assert refute_cell(ev, 0, 1)["rule"] == "unit"
    assert refute_cell(ev, 0, 3) is None
    ev = [(2, cyc(-1)), (5, cyc(1))]
    assert refute_cell(ev, 0, 3) == {"rule": "period", "n": [2, 5]}
    ev = [(3, cyc(1)), (5, cyc(1)), (15, cyc(-1))]
    assert refute_cell(ev, 0, 8) == {"rule": "product", "n": [3, 5, 15]}


def test_classify_examples():
    r = classify(mf_builtin("phi"), SearchBudget())
    assert r.verdict == "transcendental_witness" and verify_witness(r.witness) == []
    r = classify(mf_builtin("mu"), SearchBudget())
    assert r.verdict == "transcendental_witness"
    assert [n for n, _ in r.witness.evaluations] == [61, 3721]
    r = classify(mf_builtin("n_pow_k", k=2), SMALL)
    assert r.verdict == "rational" and r.form.k == 2
    assert r.rational_function == RationalFunction(UniPoly([0, 1, 1]), UniPoly([1, -1]) ** 3)
    r = classify(mf_builtin("point_support"), SMALL)
    assert r.verdict == "eventually_zero" and r.threshold == 1
    assert r.rational_function == RationalFunction(UniPoly([0, 1]), UniPoly([1]))


def test_classify_rejects_non_multiplicative():
    with pytest.raises(MultiplicativityViolation) as exc:
        classify(lambda n: 2**n, SMALL)
    assert exc.value.pair == (2, 3)


def test_classify_eventually_zero_polynomial():
    # f(2) = 3, f(p^e) = 0 otherwise: F(z) = z + 3 z^2
    f = prime_power_table({(2, 1): 3}, default="zero")
    r = classify(f, SMALL)
    assert r.verdict == "eventually_zero" and r.threshold == 2
    assert r.rational_function == RationalFunction(UniPoly([0, 1, 3]), UniPoly([1]))


def test_report_json_keys():
    r = classify(CHI4, SMALL)
    js = r.to_json()
    assert list(js)[:4] == ["verdict", "k", "chi", "rational_function"]
    assert js["verdict"] == "rational"


@settings(max_examples=10, deadline=None)
@given(st.sampled_from([3, 4, 5, 7, 8]), st.integers(0, 3), st.data())
def test_twisted_sarkozy_forms_are_rational(M, k, data):
    chars = list_dirichlet_characters(M)
    chi = chars[data.draw(st.integers(0, len(chars) - 1))]
    form = SarkozyForm(k, chi)
    r = classify(form, SMALL)
    assert r.verdict == "rational"
    assert r.rational_function.coefficients(300)[1:] == [form(n) for n in range(1, 300)]


def test_budget_monotonicity_on_corpus():
    small = SearchBudget(terms=800, k_max=3, period_max=12, witness_prime_cap=10**5)
    for name in ["phi", "mu", "one", "tau"]:
        a = classify(mf_builtin(name), small).verdict
        b = classify(mf_builtin(name), SearchBudget()).verdict
        assert a == b


def test_growth_arch_examples():
    assert not growth_check_arch(mf_builtin("phi").values(500)).flagged
    assert growth_check_arch([factorial(n) for n in range(1, 101)]).flagged
    assert not growth_check_arch([1] * 100).flagged
    rep = growth_check_arch([2**n for n in range(1, 101)])
    assert rep.lower <= 2 <= rep.upper


def test_growth_padic_examples():
    assert growth_check_padic([Fraction(1, n) for n in range(1, 201)], 2).flagged
    rep = growth_check_padic(mf_builtin("sigma").values(200), 5)
    assert not rep.flagged and rep.min_valuation >= 0
    half = [Fraction(comb(2 * n, n), (1 - 2 * n) * (-4) ** n) for n in range(1, 201)]
    rep = growth_check_padic(half, 2)
    assert rep.flagged and abs(rep.slope + 2) < Fraction(1, 20)
    assert padic_valuation(Fraction(3, 8), 2) == -3
