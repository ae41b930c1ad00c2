"""Exception types shared across the package."""


class DivfieldsError(Exception):
    """Base class for all package errors."""


class ZeroInput(DivfieldsError):
    pass


class ZeroPolynomial(DivfieldsError):
    pass


class UnsupportedDegree(DivfieldsError):
    pass


class RepeatedRoots(DivfieldsError):
    pass


class NotIrreducible(DivfieldsError):
    pass


class SingularCurve(DivfieldsError):
    pass


class UnsupportedN(DivfieldsError):
    pass


class CoordinateFieldMismatch(DivfieldsError):
    pass


class TwoTorsionNotSplit(DivfieldsError):
    pass


class UnsupportedPrime(DivfieldsError):
    pass


class UnsupportedModulus(DivfieldsError):
    pass


class BadReduction(DivfieldsError):
    pass


class PrimeTooLarge(DivfieldsError):
    pass


class InvalidKernel(DivfieldsError):
    pass


class SingularInstance(DivfieldsError):
    pass


class PoleAt(DivfieldsError):
    def __init__(self, t):
        super().__init__(f"pole at t = {t}")
        self.t = t


class DepthCapExceeded(DivfieldsError):
    """A multiquadratic field grew past the supported number of generators."""
