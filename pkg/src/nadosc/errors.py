"""Exception hierarchy.

Input problems (bad arguments, bad configs, unsupported dimensions) derive
from :class:`InvalidInputError`; the CLI maps those to exit code 2.
"""


class NadoscError(Exception):
    pass


class InvalidInputError(NadoscError, ValueError):
    pass


class SizeError(InvalidInputError):
    """Requested basis exceeds the dense-matrix cap."""


class UnsupportedDimensionError(InvalidInputError):
    pass


class ConfigError(InvalidInputError):
    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class HermiticityError(NadoscError):
    def __init__(self, residual, tol):
        super().__init__(f"matrix is not Hermitian: max|H - H^dagger| = {residual:.3e} > {tol:.3e}")
        self.residual = residual
        self.tol = tol


class ConvergenceError(NadoscError, ArithmeticError):
    pass


class InternalConsistencyError(NadoscError):
    pass
