"""Exception types shared across the toolkit."""


class AaltError(Exception):
    """Base class for all toolkit errors."""


class ArcCountError(AaltError):
    """An arc label is not used exactly twice in a crossing table."""


class NonPlanarError(AaltError):
    """A rotation system does not embed in the sphere."""


class ParseError(AaltError):
    """Malformed diagram text."""


class NotRealizableError(AaltError):
    """A Gauss code admits no spherical realization."""


class UnknownCrossingError(AaltError):
    """A crossing id does not exist in the diagram."""


class DisconnectedError(AaltError):
    """An operation requires a connected shadow."""


class NoCrossingsError(AaltError):
    """An operation requires at least one crossing."""


class NoMatchError(AaltError):
    """A rewrite was requested at a site that does not match its pattern."""


class PreconditionError(AaltError):
    """An operation's stated precondition does not hold."""


class NotAlmostAlternatingError(AaltError):
    """The decision procedure received a diagram outside its hypotheses."""


class TooLargeError(AaltError):
    """State-sum size limit exceeded."""


class InvalidGraphError(AaltError):
    """A plane-graph value violates its structural invariants."""


class UngroupableFaceError(AaltError):
    """A face cannot be assigned to a unique charge block."""


class UnknownBlockError(AaltError):
    """A charge transfer references a block that does not exist."""


class BoundExceededError(AaltError):
    """An enumeration bound is above the configured maximum."""
