"""Exception hierarchy shared by all olfm modules."""


class OlfmError(Exception):
    """Base class for every error raised by this package."""


class InvalidActor(OlfmError):
    """An actor id is outside [1, n] for the society at hand."""


class SelfLoop(OlfmError):
    """An edge starts and ends at the same actor."""


class DuplicateEdge(OlfmError):
    """The same directed edge appears more than once."""


class NotLayered(OlfmError):
    """The influence graph is cyclic or an edge does not step exactly one
    layer down."""


class LengthMismatch(OlfmError):
    """A decision vector has the wrong number of bits for the society."""


class TooLarge(OlfmError):
    """An exhaustive enumeration would exceed the configured actor cap."""


class TieEncountered(OlfmError):
    """A majority tie occurred while the tie rule is 'reject'."""


class PreconditionUnmet(OlfmError):
    """The structural precondition of an axiom check does not hold."""


class InvalidParams(OlfmError):
    """Bad parameters for a generator, file format or configuration."""
