"""Exception types shared across the package."""


class ChrysalisError(Exception):
    """Base class for all package-specific errors."""


# -- geometry / algebra ------------------------------------------------------

class DegenerateInput(ChrysalisError, ValueError):
    """Input collapses to a degenerate configuration (coincident points, ...)."""


class NotACircle(ChrysalisError, ValueError):
    """A line (A = 0) was passed where a proper circle is required."""


class DegenerateCircle(ChrysalisError, ValueError):
    """Circle is degenerate (zero discriminant / point circle) for this operation."""


class NotAPencil(ChrysalisError, ValueError):
    """The two circles are proportional and span no pencil."""


class BranchDomain(ChrysalisError, ValueError):
    """Argument lies outside the real branch of an inverse function."""


class InfiniteRadius(ChrysalisError, ValueError):
    """Curvature vanishes; the osculating circle degenerates to a line."""


class NumericalDomain(ChrysalisError, ArithmeticError):
    """An intermediate value left its mathematically guaranteed domain."""


# -- tensors / linear algebra ------------------------------------------------

class SingularMetric(ChrysalisError, ValueError):
    """Metric determinant is zero; weighted permutation symbols are undefined."""


class DimensionMismatch(ChrysalisError, ValueError):
    """Operands have incompatible shapes."""


class NotSymmetric(ChrysalisError, ValueError):
    """A symmetric matrix was required."""


class ConvergenceFailure(ChrysalisError, ArithmeticError):
    """Iteration exhausted its sweep or depth budget before converging."""


class InfeasiblePoint(ChrysalisError, ValueError):
    """A point violates the stated box constraints."""


class TooLarge(ChrysalisError, ValueError):
    """Instance exceeds the exact-search size limit."""


class RankDeficient(ChrysalisError, ValueError):
    """Vectors passed as a basis are linearly dependent."""


class AsymmetricForm(ChrysalisError, ValueError):
    """Bilinear reconstruction refused: the generating grid is not symmetric."""


# -- number theory -----------------------------------------------------------

class NotPrime(ChrysalisError, ValueError):
    """A prime modulus was required."""


class DegenerateResidue(ChrysalisError, ValueError):
    """The modulus divides the residue; the power-residue question is vacuous."""


# -- protocol ----------------------------------------------------------------

class ProtocolError(ChrysalisError):
    """Base class for handshake/wire failures."""


class FrameCorrupt(ProtocolError):
    """Frame failed structural validation (magic, length or CRC)."""


class VersionMismatch(ProtocolError):
    """Peer speaks an unknown protocol or parameter version."""


class ProtocolViolation(ProtocolError):
    """Frame type is not acceptable in the current session state."""


class TamperDetected(ProtocolError):
    """Digest or confirmation tag mismatch."""


class AuthFailed(ProtocolError):
    """Key-confirmation verification failed."""
