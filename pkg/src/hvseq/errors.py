"""Exception types raised across the package."""


class HVSeqError(Exception):
    pass


class InvalidParameter(HVSeqError, ValueError):
    """A configuration or numeric parameter is out of its allowed range."""


class InvalidInput(HVSeqError, ValueError):
    """An operand is malformed (dimension mismatch, wrong length, empty set)."""


class OutOfWindowError(InvalidInput):
    """A position falls outside the block-disjoint oracle window."""


class FormatError(HVSeqError, ValueError):
    """A data file could not be parsed."""


class IndexVersionError(FormatError):
    """A persisted index has a wrong magic or an incompatible config."""


class UndefinedCorrelationError(HVSeqError, ValueError):
    pass
