"""Exception hierarchy shared by every module."""


class TopologyError(Exception):
    """Base class for all errors raised by typedtopo."""


class SpaceBuildError(TopologyError, ValueError):
    """Rejected input while constructing or loading a space."""


class UnknownElementError(TopologyError, KeyError):
    """A point id or type label that the space does not contain."""

    def __str__(self):
        return Exception.__str__(self)


class PreconditionError(TopologyError, ValueError):
    """An algorithm was called outside the domain where it is defined."""


class InvariantError(TopologyError, AssertionError):
    """A post-condition check failed; the message carries the witness."""
