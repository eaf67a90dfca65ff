"""Exception types raised across the package.

Everything derives from :class:`IntervalFusionError` so callers can catch
one base class at process boundaries (the CLI does exactly that).
"""


class IntervalFusionError(Exception):
    """Base class for all errors raised by this package."""


# --- interval arithmetic ---------------------------------------------------

class InvalidInterval(IntervalFusionError):
    """Endpoints are non-finite or ordered lo > hi beyond tolerance."""


class NegativeOperand(IntervalFusionError):
    """Multiplication requires non-negative intervals."""


class DivisionByZero(IntervalFusionError):
    """Divisor interval or scalar must be strictly positive."""


class InvertedResult(IntervalFusionError):
    """Endpoint-wise division produced lo > hi."""


class NegativeScalar(IntervalFusionError):
    """Scaling factor must be non-negative."""


# --- fuzzy numbers and linguistic scales -----------------------------------

class InvalidFuzzyNumber(IntervalFusionError):
    """Triangular fuzzy number violates a <= b <= c or is non-finite."""


class InvalidAlpha(IntervalFusionError):
    """Alpha-cut level must lie in [0, 1]."""


class UnknownTerm(IntervalFusionError):
    """Linguistic term is not defined by the scale."""


# --- mass functions and combination ----------------------------------------

class EmptyFocalSet(IntervalFusionError):
    """The empty set cannot carry mass."""


class NegativeMass(IntervalFusionError):
    """Masses must be finite and non-negative."""


class MassSumViolation(IntervalFusionError):
    """Masses must sum to 1 within tolerance."""


class FrameMismatch(IntervalFusionError):
    """Operands use different frames, or a subset falls outside the frame."""


class TotalConflict(IntervalFusionError):
    """Combination is undefined: the conflict coefficient reached 1."""


class EmptyEvidenceList(IntervalFusionError):
    """At least one mass function is required."""


# --- weighting pipeline -----------------------------------------------------

class AllZeroWeights(IntervalFusionError):
    """A weight group with no positive endpoint cannot be normalized."""


class InvalidWeight(IntervalFusionError):
    """Discount weights must be intervals within [0, 1]."""


# --- document handling -------------------------------------------------------

class ParseError(IntervalFusionError):
    """Input is not well-formed in the declared format."""


class SchemaError(IntervalFusionError):
    """Document structure does not match the schema (missing/extra/ill-typed fields)."""


class ValidationError(IntervalFusionError):
    """Document is well-formed but violates a value-level invariant."""
