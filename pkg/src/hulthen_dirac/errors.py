"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class HulthenError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(HulthenError, ValueError):
    """A physical parameter or quantum number is outside its domain."""


class LabelError(HulthenError, ValueError):
    """A spectroscopic label could not be parsed."""


class DegenerateProblemError(HulthenError):
    """The k-equation of a hypergeometric-type problem is degenerate."""


class NumericalDegeneracyError(HulthenError):
    """The expression under the root is not a perfect square within tolerance."""


class SelectionAmbiguityError(HulthenError):
    """No unique admissible branch could be selected."""

    def __init__(self, message: str, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class UnsupportedSigmaError(HulthenError):
    """The quadratic sigma is not of the form s(1 - s)."""


class NoRealRootsError(HulthenError):
    """The energy quadratic has a negative discriminant."""


class DegenerateQuadraticError(HulthenError):
    """The leading coefficient of the energy quadratic vanishes."""


class NoBoundStateError(HulthenError):
    """No admissible bound-state energy exists for the request."""


class SymmetrySingularError(HulthenError):
    """The first-order coupling factor vanishes at the requested energy."""


class PoleError(HulthenError, ValueError):
    """A hypergeometric denominator parameter hits a pole."""


class BracketMissError(HulthenError):
    """The shooting mismatch has no usable sign change in the bracket."""


class WrongStateError(HulthenError):
    """A converged shooting root has the wrong node count."""


class NormalizationError(HulthenError, ValueError):
    """A sampled function has zero or non-finite norm."""
