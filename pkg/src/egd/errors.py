"""Exception hierarchy shared by all egd modules."""


class EgdError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRank(EgdError):
    """Rank outside the bounds of the requested diagram family."""


class BadLetter(EgdError):
    """A word contains a generator index outside 1..rank."""


class ContextMismatch(EgdError):
    """Two elements from different group contexts were combined."""


class NonReducedInput(EgdError):
    """An operation required a reduced word and got a non-reduced one."""


class LengthOutOfRange(EgdError):
    """Requested length stratum does not exist."""


class DegreeOutOfRange(EgdError):
    """Requested divisibility degree is negative or exceeds the dimension."""


class EmptyMarkedSet(EgdError):
    """A marked diagram needs at least one marked node."""


class Infeasible(EgdError):
    """The requested computation exceeds the configured element budget."""


class NotClassical(EgdError):
    """Operation defined only for families A, B, C, D."""


class NotTypeD(EgdError):
    """Operation defined only for family D."""
