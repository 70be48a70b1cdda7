"""Exception types raised across the package."""


class ObstructionError(ValueError):
    """Base class for invalid input to any of the obstruction routines."""


class DimensionMismatch(ObstructionError):
    pass


class DependentInput(ObstructionError):
    """Vectors expected to be rationally independent are not."""


class NotSquare(ObstructionError):
    pass


class NotSymmetric(ObstructionError):
    pass


class NotPrimitive(ObstructionError):
    """An epimorphism onto Z needs coprime coefficients."""


class WrongForm(ObstructionError):
    pass


class BadGamma(ObstructionError):
    pass


class BadRank(ObstructionError):
    pass


class BadParameter(ObstructionError):
    pass


class MixedGroups(ObstructionError):
    """Elements from central extensions with different parameters."""


class TooLarge(ObstructionError):
    """Exhaustive search refused because the group is over the order bound."""
