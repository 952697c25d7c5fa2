"""Exception hierarchy shared by every kwsgp module."""


class KWError(ValueError):
    """Base class for invalid input to kwsgp routines."""


class EmptyInput(KWError):
    pass


class NonCoprime(KWError):
    pass


class NegativeInput(KWError):
    pass


class ModulusNotInSemigroup(KWError):
    pass


class InvalidCorners(KWError):
    pass


class NotMinimal(KWError):
    """A generator that should be minimal turned out to be redundant."""


class ParityViolation(KWError):
    pass


class WrongTag(KWError):
    pass


class RankDeficient(KWError):
    pass


class NotAGap(KWError):
    pass


class DuplicateGenerator(KWError):
    pass


class ComplexBroken(KWError):
    pass


class CapExceeded(KWError):
    pass


class TheoremViolation(AssertionError):
    """A claimed identity failed on a concrete instance.

    ``payload`` carries the counterexample so callers can dump it.
    """

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


class UnknownTable(KWError):
    pass


class InvalidSpec(KWError):
    pass
