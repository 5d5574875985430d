"""Exception hierarchy shared by every module.

All coordinates quoted in messages are 1-based.
"""


class AsmLatticeError(ValueError):
    """Base class for all rejections raised by this package."""


class EntryOutOfRange(AsmLatticeError):
    pass


class PartialSumViolation(AsmLatticeError):
    pass


class TotalSumViolation(AsmLatticeError):
    pass


class InvariantViolation(AsmLatticeError):
    pass


class BadBottomRow(InvariantViolation):
    pass


class SizeMismatch(AsmLatticeError):
    pass


class ParameterOutOfRange(AsmLatticeError):
    pass


class IndexOutOfRange(AsmLatticeError):
    pass


class NotInSublattice(AsmLatticeError):
    pass


class NotALattice(AsmLatticeError):
    pass


class UnknownVariable(AsmLatticeError):
    pass


class ResourceLimit(AsmLatticeError):
    """Raised when a brute-force routine is asked to exceed its configured cap."""
