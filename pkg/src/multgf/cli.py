"""Command-line front end: ``python -m multgf.cli <command> ...``.

Exit status: 0 decided, 1 input error, 2 inconclusive, 3 internal contract violation.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from math import isqrt

from .classify import SearchBudget, classify
from .errors import ContractViolation, InputError, MultiplicativityViolation, StructuralError
from .exactnum import Cyc
from .holonomic import AlgebraicEquation, PRecurrence, algebraic_series, rec_eval, rec_guess, rec_product, rec_section, rec_sum
from .multfun import mf_builtin, mf_is_multiplicative_scan
from .multfun.specfile import FunctionSpec, load_function_spec
from .ratrec import TruncatedSeries, eisenstein_denominator

EXIT_OK, EXIT_INPUT, EXIT_INCONCLUSIVE, EXIT_CONTRACT = 0, 1, 2, 3
CORPUS = ("phi", "tau", "sigma", "mu", "liouville", "rho", "tau_sq", "tau_of_square")
CHECK_TERMS = 200


def dumps(obj) -> str:
    """Canonical JSON: insertion order kept, no whitespace variation."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _omega(n):
    from .multfun import factorize
    return len(factorize(n))


def _big_omega(n):
    from .multfun import factorize
    return sum(factorize(n).values())


def _budget(args, notices) -> SearchBudget:
    b = SearchBudget(args.terms, args.k_max, args.period_max, args.prime_cap, args.dfinite_mode)
    if b.notice:
        notices.append(b.notice)
    return b


def _load(args) -> FunctionSpec:
    if args.builtin:
        try:
            return FunctionSpec(mf_builtin(args.builtin, args.k), name=args.builtin)
        except KeyError as exc:
            raise StructuralError(str(exc.args[0])) from None
    try:
        with open(args.spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise StructuralError(f"{args.spec}: {exc.strerror}") from None
    return load_function_spec(text, args.spec)


def _table_budget(spec: FunctionSpec, budget: SearchBudget, notices) -> SearchBudget:
    """Shrink the budget so that every scan stays inside a raw value table."""
    N = len(spec.table)
    pm = min(budget.period_max, max(1, isqrt(N // 4)))
    cap = min(budget.witness_prime_cap, N)
    notices.append(f"value table of length {N}: terms={N}, period_max={pm}, prime cap={cap}")
    return SearchBudget(N, budget.k_max, pm, cap, budget.dfinite)


def _report_table(name, rep) -> str:
    lines = [f"function: {name}", f"verdict: {rep.verdict}"]
    if rep.form is not None:
        lines.append(f"k: {rep.form.k}")
        lines.append(f"chi: period {rep.form.chi.period}, values {dumps(rep.form.chi.to_json()['values'])}")
    if rep.rational_function is not None:
        lines.append(f"F(z) = {rep.rational_function!r}")
    if rep.threshold is not None:
        lines.append(f"f(n) = 0 for n > {rep.threshold}")
    if rep.witness is not None:
        w = rep.witness
        ev = ", ".join(f"f({n}) = {v!r}" for n, v in w.evaluations[:8])
        more = f" (+{len(w.evaluations) - 8} more)" if len(w.evaluations) > 8 else ""
        lines.append(f"witness [{w.stage}]: {ev}{more}")
        lines.append(f"refutes every (k, M) with k <= {w.k_max}, M <= {w.period_max}; verified cells: {len(w.reasons)}")
    if rep.reason:
        lines.append(f"reason: {rep.reason}")
    return "\n".join(lines)


def _classify_one(spec: FunctionSpec, budget, notices):
    if spec.table is not None:
        bad = mf_is_multiplicative_scan(spec.table)
        if bad is not None:
            raise MultiplicativityViolation(bad, "value table")
        budget = _table_budget(spec, budget, notices)
    return classify(spec.function, budget)


def cmd_classify(args) -> int:
    notices = []
    spec = _load(args)
    rep = _classify_one(spec, _budget(args, notices), notices)
    for n in notices:
        print(f"notice: {n}", file=sys.stderr)
    if args.format == "json":
        print(dumps(rep.to_json()))
    else:
        print(_report_table(spec.name, rep))
    return EXIT_INCONCLUSIVE if rep.verdict == "inconclusive" else EXIT_OK


def cmd_corpus(args) -> int:
    notices = []
    budget = _budget(args, notices)
    for n in notices:
        print(f"notice: {n}", file=sys.stderr)
    names = list(CORPUS) + [x for x in args.extra if x not in CORPUS]
    rows = []
    for name in names:
        if name in ("omega", "Omega"):
            g = _omega if name == "omega" else _big_omega
            bad = mf_is_multiplicative_scan([g(n) for n in range(1, 101)])
            rows.append({"function": name, "verdict": "rejected: not multiplicative", "pair": list(bad)})
            continue
        rep = classify(mf_builtin(name), budget)
        row = {"function": name, "verdict": rep.verdict}
        if rep.witness is not None:
            row["witness"] = [[n, v.to_json()] for n, v in rep.witness.evaluations]
            row["stage"] = rep.witness.stage
        if rep.rational_function is not None:
            row["rational_function"] = rep.rational_function.to_json()
        rows.append(row)
    if args.format == "json":
        print(dumps(rows))
    else:
        width = max(len(r["function"]) for r in rows)
        for r in rows:
            extra = ""
            if "pair" in r:
                extra = f"  pair {tuple(r['pair'])}"
            elif "witness" in r:
                extra = f"  [{r['stage']}] " + ", ".join(f"f({n})" for n, _ in r["witness"][:4])
                if len(r["witness"]) > 4:
                    extra += ", ..."
            print(f"{r['function']:<{width}}  {r['verdict']}{extra}")
    return EXIT_OK


def _read(path) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise StructuralError(f"{path}: {exc.strerror}") from None


def _read_rec(path) -> PRecurrence:
    try:
        return PRecurrence.from_text(_read(path))
    except StructuralError as exc:
        raise StructuralError(f"{path}: {exc}") from None


def _read_terms(path) -> list:
    out = []
    for lineno, raw in enumerate(_read(path).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(Cyc.from_json(json.loads(line) if line.startswith("{") else line))
        except (ValueError, ZeroDivisionError) as exc:
            raise StructuralError(f"{path}:{lineno}: {exc}") from None
    return out


def cmd_recurrence(args) -> int:
    if args.op == "guess":
        terms = _read_terms(args.terms_file)
        rec = rec_guess(terms, args.max_order, args.max_degree)
        if rec is None:
            print(f"# no recurrence with order <= {args.max_order}, degree <= {args.max_degree} "
                  f"fits {len(terms)} terms")
            return EXIT_INCONCLUSIVE
        print(rec.to_text(), end="")
        print(f"# order {rec.order}, degree {rec.max_degree}; all {len(terms)} input terms satisfy it")
        return EXIT_OK
    a = _read_rec(args.a)
    if args.op == "section":
        out = rec_section(a, args.q, args.j)
        full = rec_eval(a, args.q * CHECK_TERMS + args.j)
        want = [full[args.q * n + args.j - 1] for n in range(1, CHECK_TERMS + 1)]
        bound = f"order(a) = {a.order}"
    else:
        b = _read_rec(args.b)
        fn = rec_sum if args.op == "sum" else rec_product
        out = fn(a, b)
        ta, tb = rec_eval(a, CHECK_TERMS), rec_eval(b, CHECK_TERMS)
        want = [x + y if args.op == "sum" else x * y for x, y in zip(ta, tb)]
        bound = (f"order(a) + order(b) = {a.order + b.order}" if args.op == "sum"
                 else f"order(a) * order(b) = {a.order * b.order}")
    got = rec_eval(out, CHECK_TERMS)
    if got != want:
        raise ContractViolation(f"{args.op} recurrence disagrees with the unrolled inputs")
    print(out.to_text(), end="")
    print(f"# order {out.order} (bound {bound}), max degree {out.max_degree}, valid from n > {out.valid_from}")
    print(f"# checked: first {CHECK_TERMS} terms agree with the unrolled inputs")
    return EXIT_OK


def _read_equation(path):
    text = _read(path)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict) or "equation" not in obj or "prefix" not in obj:
        raise StructuralError(f"{path}: expected {{\"equation\": [...], \"prefix\": [...]}}")
    try:
        eq = AlgebraicEquation.from_json(obj["equation"])
        prefix = [Cyc.from_json(v) for v in obj["prefix"]]
    except (ValueError, TypeError, KeyError) as exc:
        raise StructuralError(f"{path}: {exc}") from None
    return eq, prefix


def cmd_eisenstein(args) -> int:
    eq, prefix = _read_equation(args.equation)
    u = algebraic_series(eq, prefix, args.terms + 1)
    rep = eisenstein_denominator(eq, TruncatedSeries(u[1:]), constant_term=u[0])
    if args.format == "json":
        print(dumps(rep.to_json()))
    else:
        print(f"c = {rep.c!r}")
        print(f"n_j = {rep.n}, m = {rep.m}, a = {rep.a!r}, b = {rep.b}")
        print(f"c^n f(n) integral for 1 <= n <= {rep.checked_upto}")
        if rep.smaller_valid:
            print(f"smaller divisors also passing (diagnostic): {rep.smaller_valid}")
    return EXIT_OK


def _random_rec(rng, order, degree):
    from .exactnum import UniPoly

    while True:
        coeffs = [UniPoly([rng.randint(-3, 3) for _ in range(degree + 1)]) for _ in range(order + 1)]
        coeffs[0] = UniPoly([rng.randint(1, 3)] + [rng.randint(0, 3) for _ in range(degree)])
        if coeffs[-1].is_zero():
            continue
        init = [rng.randint(-5, 5) for _ in range(order)]
        try:
            return PRecurrence(coeffs, order, init)
        except InputError:
            continue


def cmd_selfcheck(args) -> int:
    """Randomized closure checks; the seed is printed so a run can be replayed."""
    seed = args.seed if args.seed is not None else random.SystemRandom().randrange(2**32)
    print(f"seed: {seed}")
    rng = random.Random(seed)
    for i in range(args.count):
        a = _random_rec(rng, rng.randint(1, 2), rng.randint(0, 1))
        b = _random_rec(rng, rng.randint(1, 2), rng.randint(0, 1))
        q = rng.randint(1, 3)
        j = rng.randrange(q)
        ta, tb = rec_eval(a, 60), rec_eval(b, 60)
        s, p, c = rec_sum(a, b), rec_product(a, b), rec_section(a, q, j)
        ok = (s.order <= a.order + b.order and p.order <= a.order * b.order and c.order <= a.order
              and rec_eval(s, 60) == [x + y for x, y in zip(ta, tb)]
              and rec_eval(p, 60) == [x * y for x, y in zip(ta, tb)]
              and rec_eval(c, 15) == [rec_eval(a, q * 15 + j)[q * n + j - 1] for n in range(1, 16)])
        print(f"case {i}: {'ok' if ok else 'FAIL'} (orders {a.order}, {b.order}; section q={q}, j={j})")
        if not ok:
            raise ContractViolation(f"closure self-check failed on case {i} (seed {seed})")
    return EXIT_OK


def _add_budget(p):
    p.add_argument("--terms", type=int, default=5000)
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--period-max", type=int, default=60)
    p.add_argument("--prime-cap", type=int, default=10**6)
    p.add_argument("--dfinite-mode", action="store_true", help="also admit negative exponents k")
    p.add_argument("--format", choices=("table", "json"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="python -m multgf.cli",
                                     description="Algebraicity of generating series of multiplicative functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one function")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", metavar="NAME")
    src.add_argument("--spec", metavar="FILE")
    p.add_argument("--k", type=int, default=1, help="exponent for the n_pow_k builtin")
    _add_budget(p)
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("corpus", help="classify the standard arithmetic functions")
    p.add_argument("--extra", action="append", default=[], metavar="NAME",
                   help="extra builtin (or omega / Omega) to include")
    _add_budget(p)
    p.set_defaults(run=cmd_corpus)

    p = sub.add_parser("recurrence", help="closure operations and guessing")
    ops = p.add_subparsers(dest="op", required=True)
    for op in ("sum", "product"):
        q = ops.add_parser(op)
        q.add_argument("a")
        q.add_argument("b")
    q = ops.add_parser("section")
    q.add_argument("a")
    q.add_argument("q", type=int)
    q.add_argument("j", type=int)
    q = ops.add_parser("guess")
    q.add_argument("--max-order", type=int, required=True)
    q.add_argument("--max-degree", type=int, required=True)
    q.add_argument("terms_file")
    p.set_defaults(run=cmd_recurrence)

    p = sub.add_parser("eisenstein", help="denominator c with c^n f(n) integral")
    p.add_argument("equation", help='JSON {"equation": [...], "prefix": [...]}')
    p.add_argument("--terms", type=int, default=200)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(run=cmd_eisenstein)

    p = sub.add_parser("selfcheck", help="seeded randomized closure checks")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(run=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (InputError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ContractViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
