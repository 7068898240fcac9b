"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """Raised when a constructor or generator receives unusable input."""


class UnsupportedDegreeError(ValueError):
    """Raised for polynomial degrees outside the supported set {1, 2}."""


class NumericInputError(ValueError):
    """Raised when user-supplied field data evaluates to NaN or infinity."""


class InvalidSourceError(ValueError):
    """Raised when a source term violates a sign requirement (e.g. sqrt of f < 0)."""


class EllipticityError(RuntimeError):
    """A coefficient matrix failed the pointwise positive-definiteness check.

    Carries the offending sample point, the cell that contains it, the
    minimum eigenvalue found there, and (when raised inside a nonlinear
    iteration) the iteration index.
    """

    def __init__(self, message, point=None, cell=None, min_eigenvalue=None,
                 iteration=None):
        super().__init__(message)
        self.point = point
        self.cell = cell
        self.min_eigenvalue = min_eigenvalue
        self.iteration = iteration


class SolverError(RuntimeError):
    """A linear or nonlinear algebraic solve broke down.

    ``iteration`` is set when the breakdown happened inside a Newton loop.
    """

    def __init__(self, message, iteration=None):
        super().__init__(message)
        self.iteration = iteration
