"""Exception types shared across the package."""
from __future__ import annotations


class QuantumActionError(Exception):
    """Base class for all package errors."""


class DomainError(QuantumActionError):
    """Point lies outside a potential's domain."""


class BoxTooSmallError(QuantumActionError):
    """Grid box does not confine the requested eigenstates."""


class DegenerateTableError(QuantumActionError):
    """Amplitude table is empty after flooring."""


class SolverError(QuantumActionError):
    """Two-point boundary solver failed to converge.

    Carries the best residual reached so the caller can decide whether
    the partial answer is still usable.
    """

    def __init__(self, message: str, best_residual: float | None = None):
        super().__init__(message)
        self.best_residual = best_residual


class IntegratorInstabilityError(QuantumActionError):
    """Energy drift of the symplectic integrator exceeded its contract."""


class IntegrationError(QuantumActionError):
    """Split-step imaginary-time propagation became unstable."""


class NotSingleWellError(QuantumActionError):
    """Ground state is not unimodal; quantum-potential extraction refused."""


class NotDoubleWellError(QuantumActionError):
    """Parameter set does not describe a double well."""


class DegenerateFitError(QuantumActionError):
    """Fit Jacobian is rank deficient along some parameter direction."""

    def __init__(self, message: str, null_direction=None):
        super().__init__(message)
        self.null_direction = null_direction


class EnergyTooLowError(QuantumActionError):
    """Requested energy shell is empty."""


class ConfigError(QuantumActionError):
    """Run configuration is missing, malformed, or out of range."""
