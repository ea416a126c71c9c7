class LatticeError(Exception):
    """
    Base class for every failure raised by the lattice geometry pipeline
    """


class DimensionMismatchError(LatticeError, ValueError):
    pass


class NonSymmetricMatrixError(LatticeError, ValueError):
    pass


class NotPositiveDefiniteError(LatticeError, ValueError):
    pass


class SingularSystemError(LatticeError):
    """
    A linear system had no unique solution (dependent vectors)
    """


class PreconditionError(LatticeError, ValueError):
    pass


class EmptinessViolationError(LatticeError):
    """
    A lattice point was found strictly inside a supposedly empty sphere
    """


class BoxTooSmallError(LatticeError):
    pass


class UnboundedPolytopeError(LatticeError):
    pass


class StarInvariantError(LatticeError):
    pass


class PosetInvariantError(LatticeError):
    pass


class CertificateError(LatticeError):
    """
    A computed certificate failed its own a posteriori validation
    """
