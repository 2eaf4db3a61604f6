"""Exception hierarchy. Every domain error derives from TateFrobError."""


class TateFrobError(Exception):
    """Base class for all domain errors raised by the package."""


class NonPrime(TateFrobError, ValueError):
    pass


class NotIrreducible(TateFrobError, ValueError):
    pass


class Singular(TateFrobError, ValueError):
    pass


class TooLarge(TateFrobError, ValueError):
    pass


class BadTorsionLevel(TateFrobError, ValueError):
    pass


class CapExceeded(TateFrobError, ValueError):
    pass


class BasisFailure(TateFrobError, RuntimeError):
    pass


class BadDiscriminant(TateFrobError, ValueError):
    pass


class PrecisionUnderflow(TateFrobError, ValueError):
    pass


class PrecisionExhausted(TateFrobError, RuntimeError):
    pass


class InternalInconsistency(TateFrobError, AssertionError):
    """A proven identity failed to hold; indicates a bug upstream."""


class NonIntegralEntry(TateFrobError, ValueError):
    pass


class NoRowMatch(TateFrobError, AssertionError):
    pass


class WrongIsogenyClass(TateFrobError, ValueError):
    pass


class SpecialEvenTorsion(TateFrobError, ValueError):
    pass


class SpecialN2Exclusion(SpecialEvenTorsion):
    pass


class BadReductionPrime(TateFrobError, ValueError):
    pass
