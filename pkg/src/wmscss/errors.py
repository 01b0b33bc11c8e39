"""Exception hierarchy shared by all solver modules."""

from __future__ import annotations


class WmscssError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(WmscssError, ValueError):
    """An operation was called with arguments outside its domain."""


class GraphFormatError(WmscssError, ValueError):
    """A graph or solution file could not be parsed."""


class InfeasibleError(WmscssError):
    """The instance or point is infeasible.

    ``cut`` carries a :class:`~wmscss.graph.CutCertificate` witnessing the
    violation when one is available.
    """

    def __init__(self, message: str, cut=None):
        super().__init__(message)
        self.cut = cut


class SizeLimitError(WmscssError):
    """A brute-force oracle refused an instance above its configured limit."""


class InvariantError(WmscssError, RuntimeError):
    """An internal invariant failed; indicates a bug or a corrupted input."""
