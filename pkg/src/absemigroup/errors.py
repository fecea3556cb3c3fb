"""Domain errors. Everything here maps to CLI exit code 1."""


class SemigroupError(ValueError):
    """Base class for invalid inputs to the semigroup machinery."""


class NonCoprimeGenerators(SemigroupError):
    pass


class NotClosed(SemigroupError):
    """A candidate member set is not additively closed.

    ``s`` and ``t`` are members whose sum is not (``s >= t``).
    """

    def __init__(self, s: int, t: int):
        self.s, self.t = s, t
        super().__init__(f"not additively closed: {s} + {t} = {s + t} is not a member")


class NotCoprime(SemigroupError):
    pass


class BNotLarger(SemigroupError):
    pass


class NonIntegral(SemigroupError):
    pass


class NotCoprimeMu(SemigroupError):
    pass


class GenusTooLarge(SemigroupError):
    pass


class TooLarge(SemigroupError):
    pass


class ConstraintViolated(SemigroupError):
    pass


class HypothesisMismatch(SemigroupError):
    """A gap-defined semigroup does not have the claimed (a, b) as first generators."""
