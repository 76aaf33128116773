"""Search limits for the classification grid."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SearchBudget:
    """Bounds on the (k, M) grid and on the data scanned.

    ``terms`` is raised to 4 * period_max**2 when smaller; ``notice`` then
    says so.  ``dfinite`` admits negative exponents down to -k_max.
    """

    terms: int = 5000
    k_max: int = 8
    period_max: int = 60
    witness_prime_cap: int = 10**6
    dfinite: bool = False
    notice: str = ""

    def __post_init__(self):
        for name in ("terms", "k_max", "period_max", "witness_prime_cap"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"budget field {name} must be a positive integer, got {v!r}")
        need = 4 * self.period_max**2
        if self.terms < need:
            object.__setattr__(self, "notice", f"terms raised from {self.terms} to {need} = 4*period_max^2")
            object.__setattr__(self, "terms", need)

    @property
    def exponents(self) -> list:
        """k values in search order: 0..k_max, then -1..-k_max in D-finite mode."""
        ks = list(range(self.k_max + 1))
        if self.dfinite:
            ks += [-k for k in range(1, self.k_max + 1)]
        return ks

    def to_json(self) -> dict:
        out = {
            "terms": self.terms, "k_max": self.k_max, "period_max": self.period_max,
            "witness_prime_cap": self.witness_prime_cap, "dfinite": self.dfinite,
        }
        if self.notice:
            out["notice"] = self.notice
        return out
