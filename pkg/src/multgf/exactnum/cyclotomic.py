"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element of Q(zeta_m) is stored as an integer vector in the power basis
1, zeta_m, ..., zeta_m^(phi(m)-1) together with one positive common
denominator.  Elements of different orders are combined by lifting both to
Q(zeta_lcm).  Order-1 elements are the rationals; an element whose
non-constant coordinates vanish is always dropped to order 1.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational as _RationalABC
from typing import Iterable, Optional, Sequence, Union

__all__ = [
    "Cyc",
    "CycLike",
    "cyc",
    "cyc_make",
    "zeta",
    "euler_phi",
    "cyclotomic_coeffs",
    "cyc_is_root_of_unity",
    "cyc_abs_interval",
    "cyc_abs_compare",
]

CycLike = Union["Cyc", int, Fraction]


def _factor_small(n: int) -> dict:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result = n
    for p in _factor_small(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    f = _factor_small(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


@lru_cache(maxsize=None)
def cyclotomic_coeffs(d: int) -> tuple:
    """Integer coefficients of Phi_d, lowest degree first."""
    if d < 1:
        raise ValueError("cyclotomic polynomial index must be >= 1")
    # start from z^d - 1 and divide out Phi_e for proper divisors e
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = _int_exact_div(num, cyclotomic_coeffs(e))
    return tuple(num)


def _int_exact_div(num: list, den: Sequence[int]) -> list:
    # den is monic
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    assert not any(num[:dn]), "inexact division of integer polynomials"
    return q


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple:
    """Rows x^j mod Phi_m for j = 0..m-1 as integer tuples of length phi(m)."""
    phi = euler_phi(m)
    cp = cyclotomic_coeffs(m)
    rows = []
    v = [0] * phi
    v[0] = 1
    for _ in range(m):
        rows.append(tuple(v))
        top = v[-1]
        v = [0] + v[:-1]
        if top:
            for i in range(phi):
                v[i] -= top * cp[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _unit_residues(m: int) -> tuple:
    return tuple(k for k in range(1, m + 1) if gcd(k, m) == 1) if m > 1 else (1,)


def _reduce(m: int, coeffs: Sequence[int]) -> list:
    """Reduce an integer polynomial in zeta_m (any exponents) modulo Phi_m."""
    phi = euler_phi(m)
    if m == 1:
        return [sum(coeffs)]
    table = _power_table(m)
    out = [0] * phi
    for j, c in enumerate(coeffs):
        if not c:
            continue
        j %= m
        if j < phi:
            out[j] += c
        else:
            row = table[j]
            for i in range(phi):
                r = row[i]
                if r:
                    out[i] += c * r
    return out


class Cyc:
    """An element of a cyclotomic field, immutable."""

    __slots__ = ("order", "_num", "_den")

    def __init__(self, order: int, num: Sequence[int], den: int = 1):
        # trusted internal constructor: num already reduced, length phi(order)
        g = gcd(den, *num)
        if den < 0:
            g = -g
        if g != 1:
            num = tuple(x // g for x in num)
            den //= g
        else:
            num = tuple(num)
        if order > 1 and not any(num[1:]):
            order, num = 1, (num[0],)
        self.order = order
        self._num = num
        self._den = den

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rational(cls, x) -> "Cyc":
        if isinstance(x, Cyc):
            return x
        if isinstance(x, int):
            return cls(1, (x,), 1)
        if isinstance(x, _RationalABC):
            return cls(1, (x.numerator,), x.denominator)
        if isinstance(x, str):
            return cls.from_rational(Fraction(x))
        raise TypeError(f"cannot convert {type(x).__name__} to Cyc")

    @classmethod
    def make(cls, order: int, coeffs: Iterable) -> "Cyc":
        """Canonical element sum(coeffs[i] * zeta_order^i) reduced mod Phi_order."""
        if not isinstance(order, int) or order < 1:
            raise ValueError(f"invalid cyclotomic order {order!r}")
        fr = [Fraction(c) for c in coeffs]
        if not fr:
            return ZERO
        den = lcm(*(f.denominator for f in fr))
        ints = [f.numerator * (den // f.denominator) for f in fr]
        # orders 2 mod 4 are folded: zeta_{2h} = -zeta_h^((h+1)/2)
        if order % 4 == 2:
            h = order // 2
            half = (h + 1) // 2
            folded = [0] * (h if h > 1 else 1)
            for i, c in enumerate(ints):
                if c:
                    sign = -1 if i % 2 else 1
                    folded[(i * half) % h if h > 1 else 0] += sign * c
            order, ints = h, folded
        return cls(order, _reduce(order, ints), den)

    # -- views --------------------------------------------------------
    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(x, self._den) for x in self._num)

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def numerators(self) -> tuple:
        return self._num

    def is_rational(self) -> bool:
        return self.order == 1

    def is_zero(self) -> bool:
        return self.order == 1 and self._num[0] == 0

    def is_one(self) -> bool:
        return self.order == 1 and self._num[0] == 1 and self._den == 1

    def is_integral(self) -> bool:
        """True iff all power-basis coordinates are integers (i.e. in Z[zeta])."""
        return self._den == 1

    def to_fraction(self) -> Fraction:
        if self.order != 1:
            raise ValueError("element is not rational")
        return Fraction(self._num[0], self._den)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- lifting ------------------------------------------------------
    def lift(self, target: int) -> tuple:
        """Integer numerator vector of self in Q(zeta_target); denominator unchanged."""
        if target == self.order:
            return self._num
        if target % self.order:
            raise ValueError(f"cannot lift order {self.order} into {target}")
        step = target // self.order
        spread = [0] * (step * (len(self._num) - 1) + 1)
        for i, c in enumerate(self._num):
            spread[i * step] = c
        return tuple(_reduce(target, spread))

    def _common(self, other: "Cyc"):
        if self.order == other.order:
            return self.order, self._num, other._num
        m = lcm(self.order, other.order)
        return m, self.lift(m), other.lift(m)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            d1, d2 = self._den, other._den
            return Cyc(1, (self._num[0] * d2 + other._num[0] * d1,), d1 * d2)
        m, a, b = self._common(other)
        d1, d2 = self._den, other._den
        return Cyc(m, [x * d2 + y * d1 for x, y in zip(a, b)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.order, [-x for x in self._num], self._den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.order == 1:
            c = other._num[0]
            if c == 0:
                return ZERO
            return Cyc(self.order, [x * c for x in self._num], self._den * other._den)
        if self.order == 1:
            return other * self
        m, a, b = self._common(other)
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyc(m, _reduce(m, prod), self._den * other._den)

    __rmul__ = __mul__

    def galois(self, k: int) -> "Cyc":
        """Image under the automorphism zeta_m -> zeta_m^k (gcd(k, m) = 1)."""
        m = self.order
        if m == 1:
            return self
        if gcd(k, m) != 1:
            raise ValueError("Galois exponent must be coprime to the order")
        spread = [0] * m
        for i, c in enumerate(self._num):
            spread[(i * k) % m] += c
        return Cyc(m, _reduce(m, spread), self._den)

    def conjugate(self) -> "Cyc":
        return self.galois(-1 % self.order) if self.order > 1 else self

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.order == 1:
            n = self._num[0]
            return Cyc(1, (self._den if n > 0 else -self._den,), abs(n))
        others = ONE
        for k in _unit_residues(self.order)[1:]:
            others = others * self.galois(k)
        norm = self * others
        assert norm.order == 1, "field norm must be rational"
        return others * norm.inverse()

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        if self.order == 1:
            return Cyc(1, (self._num[0] ** e,), self._den ** e)
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison and hashing --------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._den != other._den:
            return False
        if self.order == other.order:
            return self._num == other._num
        if self.order == 1 or other.order == 1:
            return False
        m, a, b = self._common(other)
        return a == b

    def normalized_trace(self) -> Fraction:
        """Trace to Q divided by phi(order); invariant under lifting."""
        m = self.order
        if m == 1:
            return Fraction(self._num[0], self._den)
        total = Fraction(0)
        for i, c in enumerate(self._num):
            if c:
                d = m // gcd(i, m)
                mu = _mobius(d)
                if mu:
                    total += Fraction(c * mu, euler_phi(d))
        return total / self._den

    def __hash__(self):
        return hash(self.normalized_trace())

    # -- numerics and text --------------------------------------------
    def __complex__(self):
        import cmath

        w = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * w**i for i, c in enumerate(self._num)) / self._den

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [f"{f.numerator}/{f.denominator}" for f in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "Cyc":
        """Parse the textual encoding; bare ints and "a/b" strings are accepted as rationals."""
        if isinstance(obj, (int, str)):
            return cls.from_rational(obj)
        if not isinstance(obj, dict) or "order" not in obj or "coeffs" not in obj:
            raise ValueError(f"not a cyclotomic number encoding: {obj!r}")
        order, coeffs = obj["order"], obj["coeffs"]
        if not isinstance(order, int) or isinstance(order, bool):
            raise ValueError(f"order must be an integer, got {order!r}")
        if not isinstance(coeffs, list):
            raise ValueError("coeffs must be a list")
        if len(coeffs) > max(order, 1):
            raise ValueError(f"{len(coeffs)} coefficients exceed order {order}")
        return cls.make(order, [Fraction(c) if isinstance(c, str) else Fraction(c) for c in coeffs])

    def __repr__(self):
        if self.order == 1:
            return str(self.to_fraction())
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mon = f"z{self.order}" if i == 1 else f"z{self.order}^{i}"
                parts.append(mon if c == 1 else f"-{mon}" if c == -1 else f"({c})*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(x):
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc.from_rational(x)
    return NotImplemented


ZERO = Cyc(1, (0,), 1)
ONE = Cyc(1, (1,), 1)
Cyc.ZERO = ZERO
Cyc.ONE = ONE


def cyc(x) -> Cyc:
    """Coerce an int, Fraction, "a/b" string, JSON encoding or Cyc to Cyc."""
    if isinstance(x, Cyc):
        return x
    if isinstance(x, dict):
        return Cyc.from_json(x)
    return Cyc.from_rational(x)


def cyc_make(order: int, coeffs: Iterable) -> Cyc:
    return Cyc.make(order, coeffs)


def zeta(m: int, k: int = 1) -> Cyc:
    """zeta_m^k with zeta_m = exp(2*pi*i/m)."""
    if m < 1:
        raise ValueError("root of unity order must be >= 1")
    k %= m
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    return Cyc.make(m, coeffs)


def _divisors(n: int) -> list:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def cyc_is_root_of_unity(a: Cyc) -> Optional[int]:
    """Multiplicative order of ``a`` if it is a root of unity, else None."""
    a = cyc(a)
    if a.is_zero():
        return None
    if a.order == 1:
        f = a.to_fraction()
        return 1 if f == 1 else 2 if f == -1 else None
    if a * a.conjugate() != ONE:
        return None
    for r in _divisors(lcm(2, a.order)):
        if a**r == ONE:
            return r
    return None


class _ivprec:
    def __init__(self, bits):
        self.bits = bits

    def __enter__(self):
        from mpmath import iv

        self.saved = iv.prec
        iv.prec = self.bits
        return iv

    def __exit__(self, *exc):
        from mpmath import iv

        iv.prec = self.saved


def cyc_abs_interval(a: Cyc, bits: int = 53):
    """Rigorous mpmath interval enclosing |a| under zeta_m -> exp(2 pi i / m)."""
    if bits < 16:
        raise ValueError("precision must be at least 16 bits")
    a = cyc(a)
    with _ivprec(bits) as iv:
        if a.order == 1:
            v = iv.mpf(abs(a._num[0])) / a._den
            return v
        re = iv.mpf(0)
        im = iv.mpf(0)
        two_pi = 2 * iv.pi
        for i, c in enumerate(a._num):
            if c:
                ang = two_pi * i / a.order
                re += c * iv.cos(ang)
                im += c * iv.sin(ang)
        return iv.sqrt(re**2 + im**2) / a._den


def cyc_abs_compare(a: Cyc, r, start_bits: int = 53, max_bits: int = 4096) -> Optional[int]:
    """Sign of |a| - r for rational r >= 0; None if undecided at ``max_bits``.

    Equality is settled exactly through a * conj(a) == r^2; strict inequalities
    are settled by interval enclosures at doubling precision.
    """
    a = cyc(a)
    r = Fraction(r)
    if a.order == 1:
        x = abs(a.to_fraction())
        return (x > r) - (x < r)
    if a * a.conjugate() == Cyc.from_rational(r * r):
        return 0
    bits = start_bits
    while bits <= max_bits:
        enc = cyc_abs_interval(a, bits)
        with _ivprec(bits) as iv:
            rr = iv.mpf(r.numerator) / r.denominator
            if enc.a > rr.b:
                return 1
            if enc.b < rr.a:
                return -1
        bits *= 2
    return None
