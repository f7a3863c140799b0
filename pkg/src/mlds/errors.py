"""Exception hierarchy shared by every solver and builder in the package."""


class MldsError(Exception):
    """Base class for all package errors."""


class ParseError(MldsError, ValueError):
    pass


class EmptyInstance(MldsError, ValueError):
    pass


class InvalidVertex(MldsError, IndexError):
    pass


class EmptySet(MldsError, ValueError):
    pass


class InfeasibleInstance(MldsError):
    """The graph has a connected component with fewer than three vertices."""


class InfeasibleTarget(MldsError):
    """Some target vertex (or target pair) cannot see enough dominators."""


class OracleTooLarge(MldsError):
    """The exhaustive search was refused or abandoned because of its size."""


class OracleTimeout(OracleTooLarge):
    pass


class RadiusCapExceeded(MldsError):
    pass


class PatchNotFound(MldsError):
    pass


class ConstructionFailed(MldsError):
    pass


class EmbeddingInvalid(MldsError, ValueError):
    pass


class StubPlacementFailed(MldsError):
    pass


class GenExhausted(MldsError):
    pass
