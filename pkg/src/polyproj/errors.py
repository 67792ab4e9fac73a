"""Exception hierarchy.

Every contract error carries its class name, which the CLI prints on stderr.
"""


class PolyprojError(Exception):
    """Base class for all contract errors raised by polyproj."""

    @property
    def name(self):
        return type(self).__name__


class ZeroVector(PolyprojError):
    pass


class DimensionMismatch(PolyprojError):
    pass


class DependentDirections(PolyprojError):
    pass


class NotOrthogonal(PolyprojError):
    pass


class BadIndex(PolyprojError):
    pass


class Empty(PolyprojError):
    pass


class Infeasible(Empty):
    pass


class Unbounded(PolyprojError):
    pass


class NotFullDimensional(PolyprojError):
    pass


class InconsistentEqualities(PolyprojError):
    pass


class TooLarge(PolyprojError):
    """A brute-force oracle guardrail tripped."""


class OracleTooLarge(TooLarge):
    pass


class IntermediateBlowup(PolyprojError):
    pass


class DegeneracyDetected(PolyprojError):
    """A dimension claim that holds for non-degenerate directions failed."""


class DegenerateDirections(DegeneracyDetected):
    pass


class NotSupporting(PolyprojError):
    pass


class NotPointed(PolyprojError):
    pass


class ProjectionFull(PolyprojError):
    pass


class FormatError(PolyprojError):
    pass
