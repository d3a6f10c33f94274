"""Exception hierarchy shared by all flagpath modules."""


class FlagPathError(Exception):
    """Base class for every error raised by flagpath."""


# construction / face queries
class EmptyInput(FlagPathError, ValueError):
    pass


class NotPure(FlagPathError, ValueError):
    pass


class FaceNotInComplex(FlagPathError, ValueError):
    pass


class VertexCollision(FlagPathError, ValueError):
    pass


# graph metrics
class EmptySourceSet(FlagPathError, ValueError):
    pass


class Unreachable(FlagPathError):
    pass


class AlreadyAtTarget(FlagPathError):
    pass


class DisconnectedDualGraph(FlagPathError):
    pass


# segment construction
class PreconditionError(FlagPathError):
    """The complex violates a hypothesis of the segment construction."""


class NotFlag(PreconditionError):
    pass


class NotNormal(PreconditionError):
    pass


class Disconnected(PreconditionError):
    pass


class TargetOutsideComplex(FlagPathError, ValueError):
    pass


class FacetsNotInComplex(FlagPathError, ValueError):
    pass


class TargetNeverMet(FlagPathError):
    pass


class InvalidPath(FlagPathError, ValueError):
    pass


class EndpointMismatch(FlagPathError, ValueError):
    pass


class RecursionDepthExceeded(FlagPathError, RuntimeError):
    pass


# generators / io
class BadParameter(FlagPathError, ValueError):
    pass


class DimensionMismatch(FlagPathError, ValueError):
    pass


class BadSpec(FlagPathError, ValueError):
    pass


class ParseError(FlagPathError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
