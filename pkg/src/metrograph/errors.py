"""Exception hierarchy for metrograph."""


class MetrographError(Exception):
    """Base class for all metrograph errors."""


class EmptyGraph(MetrographError):
    pass


class NonPositiveLength(MetrographError):
    pass


class Disconnected(MetrographError):
    pass


class BadEdgeId(MetrographError):
    pass


class TOutOfRange(MetrographError):
    pass


class IndexOutOfRange(MetrographError):
    pass


class SingularBeyondNullspace(MetrographError):
    """The shifted Laplacian failed to invert cleanly; the input graph is
    effectively disconnected."""


class NumericalInconsistency(MetrographError):
    """A combinatorial non-bridge measured an endpoint resistance at (or
    beyond) its own edge length, which signals ill-conditioning."""


class SpecialConditionsNotMet(MetrographError):
    """The regular/equal-length/equal-resistance preconditions of the
    simplified tau formula failed.  ``args[0]`` lists the failures."""


class PreconditionNotMet(MetrographError):
    pass


class ParameterOutOfRange(MetrographError):
    pass


class ParityViolation(MetrographError):
    pass


class DegenerateChord(MetrographError):
    """A chord rule produced a self-loop or a duplicate edge."""


class TooLarge(MetrographError):
    pass


class TooLargeForMethod(MetrographError):
    pass


class VerificationFailed(MetrographError):
    pass
