"""Exception types shared across the package."""


class PupTentError(Exception):
    """Base class for all package errors."""


class DomainError(PupTentError):
    """Parameter outside (or on a disallowed part of) the modular domain."""


class DegenerateEdgeError(PupTentError):
    """A mesh edge is too short for angle computations."""


class DegenerateInputError(PupTentError):
    """Input geometry has collapsed (zero diameter, zero area, ...)."""


class SolverError(PupTentError):
    """Newton flattening failed (no convergence or singular Jacobian)."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace or []


class NonFlatError(PupTentError):
    """An operation requiring a flat torus received a non-flat one."""


class FitError(PupTentError):
    """Polynomial fit of a determinant curve failed its hold-out check."""


class ClusterError(PupTentError):
    """Line clustering found lines that are close but not identical."""
