"""
Which multiplicative functions have rational generating series?
================================================================

A multiplicative f gives an algebraic series sum f(n) z^n only when
f(n) = n^k chi(n) with chi periodic, or when f vanishes from some point on.
Everything else is refuted by a handful of evaluations.
"""

from multgf.classify import SearchBudget, classify, verify_witness
from multgf.multfun import list_dirichlet_characters, mf_builtin, mf_pointwise_product

budget = SearchBudget()
print(budget.notice)

# the standard arithmetic functions all come back with a finite witness
for name in ["phi", "tau", "sigma", "mu", "liouville", "rho", "tau_sq", "tau_of_square"]:
    rep = classify(mf_builtin(name), budget)
    ev = ", ".join(f"f({n})={v!r}" for n, v in rep.witness.evaluations)
    print(f"{name:14s} {rep.verdict:24s} {ev}")
    assert verify_witness(rep.witness) == []

# n^2 twisted by the odd character mod 4 is of the good shape
small = SearchBudget(terms=1000, k_max=3, period_max=12)
chi = list_dirichlet_characters(4)[1]
f = mf_pointwise_product(mf_builtin("n_pow_k", k=2), chi)
rep = classify(f, small)
print(rep.verdict, "k =", rep.form.k)
print("F(z) =", rep.rational_function)
print("first terms:", rep.rational_function.coefficients(8)[1:])
