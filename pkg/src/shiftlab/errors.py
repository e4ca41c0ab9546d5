"""Exception types raised across shiftlab."""


class ShiftLabError(ValueError):
    """Base class for all precondition and input errors."""


class EdgeListError(ShiftLabError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IsolatedVertexError(ShiftLabError):
    pass


class SignedInputError(ShiftLabError):
    pass


class WrongKindError(ShiftLabError):
    pass


class NonSymmetricKindError(ShiftLabError):
    pass


class NonIntegerEntriesError(ShiftLabError):
    pass


class DimensionTooLargeError(ShiftLabError):
    pass


class NotLaplacianSpectrumError(ShiftLabError):
    pass


class DoesNotCommuteError(ShiftLabError):
    pass


class IsShiftEnabledError(ShiftLabError):
    pass


class NotRepresentableError(ShiftLabError):
    """The filter is not a polynomial in the shift matrix.

    ``eigenspace`` holds the orthonormal basis (columns) of the repeated
    eigenspace on which the filter fails to act as a scalar, and
    ``eigenvalue`` the shared eigenvalue.
    """

    def __init__(self, message, eigenvalue=None, eigenspace=None):
        super().__init__(message)
        self.eigenvalue = eigenvalue
        self.eigenspace = eigenspace


class ParameterError(ShiftLabError):
    """An experiment parameter is out of range; ``param`` names it."""

    def __init__(self, param, message):
        super().__init__(message)
        self.param = param
