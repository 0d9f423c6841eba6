"""Exception hierarchy.

Every domain failure derives from :class:`DarbouxError`; the CLI prints the
class name on stderr, so names double as stable error codes.
"""


class DarbouxError(Exception):
    """Base class for all domain errors raised by the package."""

    @property
    def code(self):
        return type(self).__name__


class NonzeroRemainder(DarbouxError, ArithmeticError):
    """Polynomial division that was required to be exact left a remainder."""


class InvalidSpec(DarbouxError, ValueError):
    """A measure specification violates its own invariants."""


class UnsupportedSpec(DarbouxError, ValueError):
    """The measure specification has no closed-form rational moments."""


class InsufficientMoments(DarbouxError, ValueError):
    def __init__(self, needed, available):
        super().__init__(f"need {needed} moments, have {available}")
        self.needed = needed
        self.available = available


class IrrationalSupport(DarbouxError, ValueError):
    def __init__(self, point):
        super().__init__(f"square root of {point} is not rational")
        self.point = point


class NonpositiveSupport(DarbouxError, ValueError):
    def __init__(self, point):
        super().__init__(f"atom at {point} is not positive")
        self.point = point


class SingularHankel(DarbouxError, ZeroDivisionError):
    def __init__(self, order):
        super().__init__(f"Hankel determinant of order {order} vanishes")
        self.order = order


class DegenerateMoments(DarbouxError, ValueError):
    """The Hankel rank of the moment data is exhausted at ``rank``."""

    def __init__(self, rank):
        super().__init__(f"moment functional degenerates at rank {rank}")
        self.rank = rank


class PivotOnSpectrum(DarbouxError, ValueError):
    def __init__(self, index, pivot):
        super().__init__(f"P_{index} vanishes at the pivot {pivot}")
        self.index = index
        self.pivot = pivot


class OddGeneralizedTruncation(DarbouxError, ValueError):
    def __init__(self, order):
        super().__init__(f"order {order} does not cut whole 2x2 blocks")
        self.order = order


class LengthMismatch(DarbouxError, ValueError):
    pass


class SingularPivot(DarbouxError, ZeroDivisionError):
    """``P_j`` vanishes at the shift point, so the LU factorization does not exist."""

    def __init__(self, index):
        super().__init__(f"P_{index} vanishes at the shift point")
        self.index = index


class SignConditionViolated(DarbouxError, ValueError):
    """``(-1)^j P_j(alpha^2) <= 0``: the real shift lies outside the spectral gap."""

    def __init__(self, index):
        super().__init__(f"(-1)^{index} P_{index}(shift) is not positive")
        self.index = index


class InvalidShift(DarbouxError, ValueError):
    pass


class NotStieltjes(DarbouxError, ValueError):
    def __init__(self, index, reason=""):
        super().__init__(f"moment data is not of Stieltjes type at level {index}"
                         + (f": {reason}" if reason else ""))
        self.index = index


class DepthExceeded(DarbouxError, IndexError):
    def __init__(self, requested, available):
        super().__init__(f"requested depth {requested}, fraction has {available}")
        self.requested = requested
        self.available = available
