"""Exception types and their CLI exit codes."""


class G2KLError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class WordParseError(G2KLError):
    """Input word contains characters outside {r,s,t}/{0,1,2}."""

    exit_code = 2


class ResourceLimitError(G2KLError):
    """A configured cap (operand length, support size, subword count) was hit."""

    exit_code = 3


class PropositionViolationError(G2KLError):
    """An invariant the tables rely on failed; indicates a bug, not bad input."""

    exit_code = 4


class DegreeViolationError(PropositionViolationError):
    """A structure constant exceeded the degree bound set by the a-function."""


class TableMismatchError(PropositionViolationError):
    """A recomputed table entry disagrees with the stored reference word."""


class AmbiguousDecompositionError(PropositionViolationError):
    """More than one cell decomposition matched; must never happen."""


class NotInLowestCellError(G2KLError):
    """Operation requires elements of the lowest two-sided cell."""

    exit_code = 2


class CacheFormatError(G2KLError):
    """Cache file is corrupt or was written with an incompatible configuration."""

    exit_code = 5
