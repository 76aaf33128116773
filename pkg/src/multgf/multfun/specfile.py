"""JSON function specifications.

    {"kind": "builtin", "name": "phi"}                  ("k" for n_pow_k)
    {"kind": "periodic", "period": M, "values": [cyc, ...]}
    {"kind": "prime_power_table", "entries": [{"p": 2, "e": 1, "value": cyc}, ...], "default": "one"}
    {"kind": "values", "values": [cyc, ...]}            f(1), f(2), ... as a raw table

Errors carry a JSON path such as ``$.entries[2].value``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from ..errors import StructuralError
from ..exactnum import Cyc
from .arith import is_prime
from .functions import BUILTIN_NAMES, MultiplicativeFunction, mf_builtin, prime_power_table
from .periodic import periodic_make


@dataclass
class FunctionSpec:
    function: Optional[MultiplicativeFunction]
    table: Optional[list] = None        # set for the "values" kind
    name: str = "f"


def _cyc(obj, where):
    try:
        return Cyc.from_json(obj)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise StructuralError(f"{where}: {exc}") from None


def _int(obj, where, low=1):
    if not isinstance(obj, int) or isinstance(obj, bool) or obj < low:
        raise StructuralError(f"{where}: expected an integer >= {low}, got {obj!r}")
    return obj


def _table_function(values, name):
    N = len(values)

    def rule(p, e):
        q = p**e
        if q > N:
            raise LookupError(f"f({q}) lies beyond the {N}-entry table")
        return values[q - 1]

    return MultiplicativeFunction(rule, name)


def parse_function_spec(obj, where: str = "$") -> FunctionSpec:
    if not isinstance(obj, dict):
        raise StructuralError(f"{where}: expected an object")
    kind = obj.get("kind")
    if kind == "builtin":
        name = obj.get("name")
        if name not in BUILTIN_NAMES:
            raise StructuralError(f"{where}.name: unknown builtin {name!r}; known: {', '.join(BUILTIN_NAMES)}")
        k = obj.get("k", 1)
        if not isinstance(k, int) or isinstance(k, bool):
            raise StructuralError(f"{where}.k: expected an integer")
        return FunctionSpec(mf_builtin(name, k), name=name)
    if kind == "periodic":
        M = _int(obj.get("period"), f"{where}.period")
        vals = obj.get("values")
        if not isinstance(vals, list):
            raise StructuralError(f"{where}.values: expected a list")
        chi = periodic_make(M, [_cyc(v, f"{where}.values[{i}]") for i, v in enumerate(vals)])
        return FunctionSpec(chi.as_function(), name=f"periodic mod {M}")
    if kind == "prime_power_table":
        entries = obj.get("entries")
        if not isinstance(entries, list):
            raise StructuralError(f"{where}.entries: expected a list")
        table = {}
        for i, ent in enumerate(entries):
            at = f"{where}.entries[{i}]"
            if not isinstance(ent, dict):
                raise StructuralError(f"{at}: expected an object")
            p, e = _int(ent.get("p"), f"{at}.p", 2), _int(ent.get("e"), f"{at}.e")
            if not is_prime(p):
                raise StructuralError(f"{at}.p: {p} is not prime")
            if (p, e) in table:
                raise StructuralError(f"{at}: duplicate entry for {p}^{e}")
            table[(p, e)] = _cyc(ent.get("value"), f"{at}.value")
        default = obj.get("default", "one")
        if default not in ("one", "zero"):
            raise StructuralError(f"{where}.default: expected 'one' or 'zero'")
        return FunctionSpec(prime_power_table(table, default), name="table")
    if kind == "values":
        vals = obj.get("values")
        if not isinstance(vals, list) or len(vals) < 2:
            raise StructuralError(f"{where}.values: expected a list of at least 2 values")
        table = [_cyc(v, f"{where}.values[{i}]") for i, v in enumerate(vals)]
        return FunctionSpec(_table_function(table, "values"), table=table, name="values")
    raise StructuralError(f"{where}.kind: expected builtin, periodic, prime_power_table or values, got {kind!r}")


def load_function_spec(text: str, source: str = "<spec>") -> FunctionSpec:
    """Parse spec text; syntax errors are reported as source:line:column."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return parse_function_spec(obj)
    except StructuralError as exc:
        raise StructuralError(f"{source}: {exc}") from None
