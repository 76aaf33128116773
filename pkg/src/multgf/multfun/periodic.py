"""Periodic multiplicative functions, Dirichlet characters, exceptional-prime constructions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from ..errors import ConsistencyError, MultiplicativityViolation, RootOfUnityViolation, StructuralError
from ..exactnum import ONE, ZERO, Cyc, cyc, euler_phi, zeta
from .arith import factorize
from .functions import MultiplicativeFunction

# multiplicativity of a period-M table is certified on coprime pairs in [1, BOX * M^2]
BOX = 4


class PeriodicMultiplicative:
    """A multiplicative function of period M.

    ``values[i]`` is the value on residue i + 1, so residue 0 sits at index M - 1.
    Build through :func:`periodic_make` to get the validation.
    """

    __slots__ = ("period", "values")

    def __init__(self, period: int, values: Sequence):
        self.period = period
        self.values = tuple(cyc(v) for v in values)

    def __call__(self, n: int) -> Cyc:
        return self.values[(n - 1) % self.period]

    def residue_value(self, a: int) -> Cyc:
        return self.values[(a - 1) % self.period]

    def as_function(self) -> MultiplicativeFunction:
        return MultiplicativeFunction(lambda p, e: self(p**e), f"chi{self.period}")

    def lift(self, M: int) -> "PeriodicMultiplicative":
        if M % self.period:
            raise ValueError("lift target must be a multiple of the period")
        return PeriodicMultiplicative(M, [self(n) for n in range(1, M + 1)])

    def __mul__(self, other: "PeriodicMultiplicative") -> "PeriodicMultiplicative":
        M = lcm(self.period, other.period)
        return PeriodicMultiplicative(M, [self(n) * other(n) for n in range(1, M + 1)])

    def conjugate(self) -> "PeriodicMultiplicative":
        return PeriodicMultiplicative(self.period, [v.conjugate() for v in self.values])

    def __eq__(self, other):
        if not isinstance(other, PeriodicMultiplicative):
            return NotImplemented
        M = lcm(self.period, other.period)
        return all(self(n) == other(n) for n in range(1, M + 1))

    def __hash__(self):
        return hash(self.minimal_period_form().values)

    def minimal_period(self) -> int:
        M = self.period
        for d in sorted(x for x in range(1, M + 1) if M % x == 0):
            if all(self.values[i] == self.values[i % d] for i in range(M)):
                return d
        return M

    def minimal_period_form(self) -> "PeriodicMultiplicative":
        d = self.minimal_period()
        return PeriodicMultiplicative(d, self.values[:d])

    def is_principal(self) -> bool:
        return all((v.is_one() if gcd(a, self.period) == 1 else v.is_zero())
                   for a, v in enumerate(self.values, start=1))

    def to_json(self) -> dict:
        return {"period": self.period, "values": [v.to_json() for v in self.values]}

    @classmethod
    def from_json(cls, obj) -> "PeriodicMultiplicative":
        return periodic_make(int(obj["period"]), [Cyc.from_json(v) for v in obj["values"]])

    def __repr__(self):
        return f"PeriodicMultiplicative({self.period}, {list(self.values)!r})"


def _coprime_representatives(alpha: int, beta: int, M: int):
    """Least coprime a = alpha (mod M), b = beta (mod M) inside the validation box."""
    limit = BOX * M * M
    a = alpha if alpha > 0 else M
    while a <= limit:
        b = beta if beta > 0 else M
        while b <= limit:
            if gcd(a, b) == 1 and a * b > 0:
                return a, b
            b += M
        a += M
    return None


def periodic_make(M: int, values: Sequence) -> PeriodicMultiplicative:
    """Validated period-M multiplicative function from its residue table.

    Checks value(1) = 1, value(a)^phi(M) = 1 for units a, and
    f(ab) = f(a) f(b) on every pair of residue classes that contains a
    coprime pair (equivalently: on all coprime a, b <= 4 M^2).
    """
    if M < 1:
        raise StructuralError("period must be >= 1")
    vals = [cyc(v) for v in values]
    if len(vals) != M:
        raise StructuralError(f"expected {M} residue values, got {len(vals)}")
    chi = PeriodicMultiplicative(M, vals)
    if not chi(1).is_one():
        raise MultiplicativityViolation((1, 1), "value at 1 must be 1")
    ph = euler_phi(M)
    for a in range(1, M + 1):
        if gcd(a, M) == 1 and not (chi(a) ** ph).is_one():
            raise RootOfUnityViolation(a, f"value^{ph} = {chi(a) ** ph!r}")
    for alpha in range(1, M + 1):
        va = chi(alpha)
        for beta in range(alpha, M + 1):
            if gcd(gcd(alpha, beta), M) != 1:
                continue
            if chi(alpha * beta) != va * chi(beta):
                pair = _coprime_representatives(alpha % M, beta % M, M)
                raise MultiplicativityViolation(pair, f"residues {alpha}, {beta} mod {M}")
    return chi


def periodic_eval(chi: PeriodicMultiplicative, n: int) -> Cyc:
    if n < 1:
        raise ValueError("argument must be positive")
    return chi(n)


def box_multiplicativity_check(chi: PeriodicMultiplicative):
    """Literal check of f(ab) = f(a) f(b) over coprime a <= b in [1, 4M^2].  Slow; for tests."""
    M = chi.period
    limit = BOX * M * M
    for a in range(1, limit + 1):
        va = chi(a)
        for b in range(a, limit + 1):
            if gcd(a, b) == 1 and chi(a * b) != va * chi(b):
                return (a, b)
    return None


# -- Dirichlet characters ------------------------------------------------

def _primitive_root_prime_power(p: int, e: int) -> int:
    phi_p = p - 1
    qs = list(factorize(phi_p)) if phi_p > 1 else []
    g = 2 if p > 2 else 1
    while any(pow(g, phi_p // q, p) == 1 for q in qs):
        g += 1
    if e >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _unit_group_generators(M: int):
    """[(generator mod M, order)] for a direct-product decomposition of (Z/M)^*."""
    gens = []
    fac = factorize(M) if M > 1 else {}
    for p, e in fac.items():
        q = p**e
        rest = M // q
        local = []
        if p == 2:
            if e >= 2:
                local.append((q - 1, 2))
            if e >= 3:
                local.append((5, 2 ** (e - 2)))
        else:
            local.append((_primitive_root_prime_power(p, e), (p - 1) * p ** (e - 1)))
        for g, order in local:
            # lift: g mod q, 1 mod rest
            if rest == 1:
                G = g % M
            else:
                t = ((g - 1) * pow(rest, -1, q)) % q
                G = (1 + rest * t) % M
            gens.append((G, order))
    return gens


def list_dirichlet_characters(M: int) -> list:
    """All phi(M) Dirichlet characters mod M, principal character first.

    Characters are indexed by exponent tuples (j_1, ..., j_r) in
    lexicographic order, with chi(g_i) = zeta_{ord g_i}^{j_i}.
    """
    if M < 1:
        raise ValueError("modulus must be >= 1")
    gens = _unit_group_generators(M)
    orders = [o for _, o in gens]
    L = lcm(*orders) if orders else 1
    # enumerate units as products of generator powers
    units = [(1 % M if M > 1 else 0, ())]
    for g, o in gens:
        nxt = []
        for u, t in units:
            x = u
            for s in range(o):
                nxt.append((x, t + (s,)))
                x = x * g % M
        units = nxt
    roots = [zeta(L, i) for i in range(L)]
    chars = []
    exps = [()]
    for o in orders:
        exps = [j + (s,) for j in exps for s in range(o)]
    for j in exps:
        table = [ZERO] * M
        for u, t in units:
            k = sum(ji * ti * (L // oi) for ji, ti, oi in zip(j, t, orders)) % L
            table[(u - 1) % M] = roots[k]
        chars.append(PeriodicMultiplicative(M, table))
    return chars


# -- construction from exceptional-prime data --------------------------------

def lw_build(d: int, chi: PeriodicMultiplicative, table: dict, chi_star: Optional[PeriodicMultiplicative] = None):
    """Periodic multiplicative function from a character and exceptional-prime data.

    ``table`` maps each prime p_i | d to ``(n_i, [a_0, ..., a_{l_i}])`` where
    p_i^{l_i} exactly divides d.  Values on p_i^{l_i + t} continue as
    a_{l_i} * chi_star(p_i^t); on primes not dividing d the function equals chi.
    """
    if d < 1:
        raise StructuralError("d must be >= 1")
    if d % chi.period:
        raise StructuralError("chi must have period dividing d")
    fac = factorize(d) if d > 1 else {}
    if set(table) != set(fac):
        raise StructuralError(f"exceptional primes {sorted(table)} do not match the primes of d {sorted(fac)}")
    star = chi_star if chi_star is not None else PeriodicMultiplicative(1, [ONE])
    rows = {}
    for p, (n_i, coeffs) in table.items():
        l_i = fac[p]
        a = [cyc(c) for c in coeffs]
        if len(a) != l_i + 1:
            raise StructuralError(f"prime {p}: need a_0..a_{l_i}, got {len(a)} values")
        if not a[0].is_one():
            raise StructuralError(f"prime {p}: a_0 must be 1")
        if not 0 <= n_i <= l_i:
            raise StructuralError(f"prime {p}: n_i = {n_i} outside [0, {l_i}]")
        for l in range(n_i + 1, l_i + 1):
            if not a[l].is_zero():
                raise StructuralError(f"prime {p}: a_{l} must vanish for {n_i} < l <= {l_i}")
        rows[p] = (l_i, a)

    def rule(p, e):
        if p in rows:
            l_i, a = rows[p]
            return a[e] if e <= l_i else a[l_i] * star(p ** (e - l_i))
        return chi(p**e)

    f = MultiplicativeFunction(rule, f"lw{d}")
    span = BOX * d * d
    vals = f.values(span)
    for n in range(span - d):
        if vals[n] != vals[n + d]:
            raise ConsistencyError(f"result is not {d}-periodic: f({n + 1}) != f({n + 1 + d})")
    return periodic_make(d, vals[:d])


# -- the form n^k chi(n) ----------------------------------------------------

@dataclass(frozen=True)
class SarkozyForm:
    """n -> n^k chi(n).  Negative k only in D-finite mode."""

    k: int
    chi: PeriodicMultiplicative
    dfinite: bool = False

    def __post_init__(self):
        if self.k < 0 and not self.dfinite:
            raise ValueError("negative k requires dfinite mode")

    def __call__(self, n: int) -> Cyc:
        v = self.chi(n)
        if v.is_zero():
            return v
        return v * (Fraction(n) ** self.k)

    def as_function(self) -> MultiplicativeFunction:
        k, chi = self.k, self.chi
        return MultiplicativeFunction(lambda p, e: chi(p**e) * Fraction(p) ** (k * e), f"n^{k}*chi{chi.period}")

    def to_json(self) -> dict:
        return {"k": self.k, "chi": self.chi.to_json()}
