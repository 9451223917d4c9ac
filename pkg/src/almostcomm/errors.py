"""Exception hierarchy.

Capability errors (the input is outside what the exact tools handle) are kept
apart from contract violations so batch drivers can skip the former.
"""


class AlmostCommError(Exception):
    pass


class CapabilityError(AlmostCommError):
    """Input lies outside the exact-computation scope; safe to skip."""


class NonRationalSpectrum(CapabilityError):
    pass


class BoundExceeded(CapabilityError):
    pass


class NotDivisible(AlmostCommError, ArithmeticError):
    pass


class NotOnVariety(AlmostCommError, ValueError):
    """The quadruple does not satisfy [X,Y] + ij = 0."""


class NonGeneric(AlmostCommError, ValueError):
    pass


class InternalInconsistency(AlmostCommError, AssertionError):
    pass


class NoCommonFlag(AlmostCommError):
    pass


class NotSigmaPrime(AlmostCommError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSymmetric(AlmostCommError, ValueError):
    pass
