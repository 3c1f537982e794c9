"""Exception hierarchy shared by all modules."""


class ListDistError(Exception):
    """Base class for every error raised by this package."""


class GraphError(ListDistError, ValueError):
    """Malformed graph input (loops, out-of-range endpoints, bad family parameters)."""


class DisconnectedError(GraphError):
    pass


class SizeLimitError(ListDistError):
    """An exact search was asked to run above its configured vertex bound."""


class NotAGroupError(ListDistError):
    """A permutation list handed to group profiling is not closed under composition."""


class ListError(ListDistError, ValueError):
    """Malformed list assignment or a list too short for the requested operation."""


class PreconditionError(ListDistError):
    """Input rejected because a constructive procedure's hypothesis does not hold."""


class BudgetExceeded(ListDistError):
    """Exhaustive enumeration hit its node budget."""


class InternalInconsistency(ListDistError):
    """A constructive procedure reached a state its correctness argument rules out."""


class RepairWatchdogError(InternalInconsistency):
    """The recoloring loop of the Brooks-type procedure did not settle in time."""


class CompositionError(InternalInconsistency):
    """Block composition of part colorings produced an invalid coloring."""
