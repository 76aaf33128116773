"""Exception hierarchy.  ``InputError`` subclasses map to exit status 1,
``ContractViolation`` to exit status 3."""


class InputError(ValueError):
    """Malformed or mathematically inadmissible input."""


class MultiplicativityViolation(InputError):
    def __init__(self, pair, detail=""):
        self.pair = tuple(pair)
        msg = f"not multiplicative: violation at pair {self.pair}"
        super().__init__(msg + (f" ({detail})" if detail else ""))


class RootOfUnityViolation(InputError):
    def __init__(self, residue, detail=""):
        self.residue = residue
        super().__init__(f"value at residue {residue} is not a root of unity" + (f" ({detail})" if detail else ""))


class StructuralError(InputError):
    """Data does not have the required shape."""


class ConsistencyError(InputError):
    """Data has the right shape but the object it defines is inconsistent."""


class InconsistentInputError(InputError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotARootError(InputError):
    pass


class InsufficientPrefixError(InputError):
    pass


class CoprimalityError(InputError):
    pass


class ReconstructionError(InputError):
    """Not enough terms, or no candidate of the requested size exists."""


class ContractViolation(RuntimeError):
    """An internal guarantee failed; indicates a bug rather than bad input."""
