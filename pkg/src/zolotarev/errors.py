"""Exception types raised on violated preconditions.

All of them derive from ``ValueError`` so callers that only care about
"bad input" can catch one thing.
"""


class PreconditionError(ValueError):
    """Base class for every input-validation failure in the package."""


class DegreeMismatch(PreconditionError):
    pass


class NotAPermutation(PreconditionError):
    pass


class NonCoprimeDimensions(PreconditionError):
    pass


class EvenDimension(PreconditionError):
    pass


class EvenOrSmallModulus(PreconditionError):
    pass


class CapacityError(PreconditionError):
    pass


class DealMismatch(PreconditionError):
    pass


class ZeroModulus(PreconditionError):
    pass


class EvenModulus(PreconditionError):
    pass


class NotCoprime(PreconditionError):
    pass


class DividesModulus(PreconditionError):
    pass


class NotPrime(PreconditionError):
    pass
