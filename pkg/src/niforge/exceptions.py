"""Exception hierarchy shared by all niforge modules."""


class NIForgeError(Exception):
    """Base class for every error raised by niforge."""


class DimensionError(NIForgeError, ValueError):
    """Matrix shapes are inconsistent."""


class NumericError(NIForgeError, ArithmeticError):
    """A numerical routine failed to meet its own accuracy checks."""


class PreconditionError(NIForgeError, ValueError):
    """An input violates a documented precondition (e.g. F not Hurwitz)."""


class AssumptionError(NIForgeError, ValueError):
    """A modelling assumption such as ``R > 0`` or ``C1 B2`` invertible fails.

    ``assumption`` names the violated assumption so callers (the CLI in
    particular) can report it verbatim.
    """

    def __init__(self, assumption, message=None):
        self.assumption = assumption
        super().__init__(message or assumption)


class ScopeError(NIForgeError, ValueError):
    """The requested check is not defined for this kind of system."""


class NearPoleError(NIForgeError, ValueError):
    """Evaluation point lies (numerically) on a pole."""

    def __init__(self, s, pole, distance):
        self.s = s
        self.pole = pole
        self.distance = distance
        super().__init__(
            f"s={s!r} is within {distance:.3g} of the pole {pole!r}")


class ModelParseError(NIForgeError, ValueError):
    """A model file is malformed; ``where`` locates the offending field."""

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)
