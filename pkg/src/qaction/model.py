"""Potentials, classical actions, quantum-action parameter sets and their symmetry checks.

Conventions used throughout the package: hbar = 1 and m = 1 unless stated
otherwise; the hydrogen sector works in atomic units (hbar = m = e = 1) so
the ionisation energy is 1/2 and the Bohr radius is 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import DomainError

__all__ = [
    "PhysConstants",
    "Polynomial1D",
    "RadialPotential",
    "Quartic2D",
    "PotentialSpec",
    "ClassicalAction",
    "QuantumActionParams1D",
    "CrossTerms2D",
    "QuantumActionParams2D",
    "SymmetryCheck",
    "SymmetryReport",
    "eval_potential",
    "eval_gradient",
    "validate_symmetries",
]


@dataclass(frozen=True)
class PhysConstants:
    """Physical constants; defaults are the hbar = m = 1 convention."""

    hbar: float = 1.0
    mass_default: float = 1.0

    def __post_init__(self):
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")
        if self.mass_default <= 0:
            raise ValueError("mass_default must be positive")


@dataclass(frozen=True)
class Polynomial1D:
    """One-dimensional polynomial potential V(x) = sum_k coeffs[k] x^k, degree <= 4."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) == 0:
            raise ValueError("need at least a constant coefficient")
        if len(coeffs) > 5:
            raise ValueError("polynomial degree is fixed to at most 4")
        object.__setattr__(self, "coeffs", coeffs + (0.0,) * (5 - len(coeffs)))

    @property
    def degree(self) -> int:
        for k in range(4, -1, -1):
            if self.coeffs[k] != 0.0:
                return k
        return 0

    def is_confining(self) -> bool:
        """True if the leading even coefficient is positive (harmonic included)."""
        deg = self.degree
        return deg in (2, 4) and self.coeffs[deg] > 0.0


@dataclass(frozen=True)
class RadialPotential:
    """Centrifugal plus Coulomb potential on r > 0.

    V_l(r) = hbar^2 l(l+1) / (2 m r^2) - e^2 / r
    """

    l: int
    electron_mass: float = 1.0
    charge_sq: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if self.l < 0:
            raise ValueError("angular momentum l must be non-negative")
        if self.electron_mass <= 0:
            raise ValueError("electron_mass must be positive")
        if self.charge_sq <= 0:
            raise ValueError("charge_sq must be positive")


@dataclass(frozen=True)
class Quartic2D:
    """Coupled quartic potential V(x, y) = v0 + v2 (x^2+y^2) + v22 x^2 y^2 + v4 (x^4+y^4).

    Invariant under x -> -x, y -> -y and x <-> y by construction.
    """

    v0: float = 0.0
    v2: float = 0.5
    v22: float = 0.05
    v4: float = 0.0


PotentialSpec = Union[Polynomial1D, RadialPotential, Quartic2D]


@dataclass(frozen=True)
class ClassicalAction:
    """Classical action data: kinetic mass plus a local potential."""

    mass: float
    potential: PotentialSpec

    def __post_init__(self):
        if self.mass <= 0:
            raise ValueError("mass must be positive")


@dataclass(frozen=True)
class QuantumActionParams1D:
    """Quantum-action parameters for the 1-D quartic ansatz.

    ``transition_time`` is the Euclidean transition time T; ``math.inf``
    marks the asymptotic (zero-temperature) parameter set.  ``ln_z`` is the
    fitted normalisation, populated by the fitter.  The ``*_err`` fields
    carry one-sigma fit uncertainties when available.
    """

    m_tilde: float
    v_tilde: tuple[float, ...]
    transition_time: float = math.inf
    ln_z: float | None = None
    m_tilde_err: float | None = None
    v_tilde_err: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.m_tilde <= 0:
            raise ValueError("m_tilde must be positive")
        v = tuple(float(c) for c in self.v_tilde)
        if len(v) > 5:
            raise ValueError("quantum-action ansatz is fixed to degree 4")
        object.__setattr__(self, "v_tilde", v + (0.0,) * (5 - len(v)))
        if self.v_tilde_err is not None:
            e = tuple(float(c) for c in self.v_tilde_err)
            object.__setattr__(self, "v_tilde_err", e + (0.0,) * (5 - len(e)))
        if not (self.transition_time > 0):
            raise ValueError("transition_time must be positive (math.inf allowed)")

    @property
    def is_asymptotic(self) -> bool:
        return math.isinf(self.transition_time)

    def potential(self) -> Polynomial1D:
        return Polynomial1D(self.v_tilde)


@dataclass(frozen=True)
class CrossTerms2D:
    """Diagnostic cross couplings excluded from the canonical 2-D ansatz.

    ``kin_xy`` multiplies xdot*ydot; the rest multiply the symmetric
    polynomial combinations xy, xy^3 + x^3 y, x^2 y^4 + x^4 y^2, x^4 y^4.
    """

    kin_xy: float = 0.0
    c_xy: float = 0.0
    c_xy3: float = 0.0
    c_x2y4: float = 0.0
    c_x4y4: float = 0.0
    kin_xy_err: float | None = None
    c_xy_err: float | None = None
    c_xy3_err: float | None = None
    c_x2y4_err: float | None = None
    c_x4y4_err: float | None = None

    def as_items(self) -> list[tuple[str, float, float | None]]:
        return [
            ("kin_xy", self.kin_xy, self.kin_xy_err),
            ("c_xy", self.c_xy, self.c_xy_err),
            ("c_xy3", self.c_xy3, self.c_xy3_err),
            ("c_x2y4", self.c_x2y4, self.c_x2y4_err),
            ("c_x4y4", self.c_x4y4, self.c_x4y4_err),
        ]


@dataclass(frozen=True)
class QuantumActionParams2D:
    """Symmetry-restricted 2-D quantum-action parameters.

    The canonical ansatz keeps the x<->y and parity symmetric terms only;
    ``cross_terms`` are carried as diagnostics and are never used by the
    trajectory integrator.
    """

    m_tilde: float
    v_tilde_0: float
    v_tilde_2: float
    v_tilde_22: float
    v_tilde_4: float
    transition_time: float = math.inf
    ln_z: float | None = None
    cross_terms: CrossTerms2D | None = None
    m_tilde_err: float | None = None
    v_tilde_err: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.m_tilde <= 0:
            raise ValueError("m_tilde must be positive")
        if self.v_tilde_4 < 0 or (self.v_tilde_4 == 0 and self.v_tilde_2 <= 0):
            raise ValueError("potential must be confining (v_tilde_4 > 0 or harmonic)")
        if not (self.transition_time > 0):
            raise ValueError("transition_time must be positive (math.inf allowed)")

    @property
    def is_asymptotic(self) -> bool:
        return math.isinf(self.transition_time)

    def potential(self) -> Quartic2D:
        return Quartic2D(self.v_tilde_0, self.v_tilde_2, self.v_tilde_22, self.v_tilde_4)

    @classmethod
    def classical(cls, mass: float, pot: Quartic2D, transition_time: float = math.inf):
        """Wrap a classical 2-D action as a fit-free parameter set."""
        return cls(
            m_tilde=mass,
            v_tilde_0=pot.v0,
            v_tilde_2=pot.v2,
            v_tilde_22=pot.v22,
            v_tilde_4=pot.v4,
            transition_time=transition_time,
        )


def eval_potential(potential: PotentialSpec, point):
    """Evaluate a potential at a scalar point, a 2-D pair, or an array of points.

    Radial potentials require r > 0; violations raise DomainError.
    """
    if isinstance(potential, Polynomial1D):
        x = np.asarray(point, dtype=float)
        c = potential.coeffs
        out = c[0] + x * (c[1] + x * (c[2] + x * (c[3] + x * c[4])))
        return float(out) if np.ndim(point) == 0 else out
    if isinstance(potential, RadialPotential):
        r = np.asarray(point, dtype=float)
        if np.any(r <= 0):
            raise DomainError("radial potential is defined only for r > 0")
        cent = potential.hbar**2 * potential.l * (potential.l + 1) / (2.0 * potential.electron_mass)
        out = cent / r**2 - potential.charge_sq / r
        return float(out) if np.ndim(point) == 0 else out
    if isinstance(potential, Quartic2D):
        pt = np.asarray(point, dtype=float)
        x, y = pt[..., 0], pt[..., 1]
        x2, y2 = x * x, y * y
        out = potential.v0 + potential.v2 * (x2 + y2) + potential.v22 * x2 * y2 \
            + potential.v4 * (x2 * x2 + y2 * y2)
        return float(out) if out.ndim == 0 else out
    raise TypeError(f"unknown potential spec {type(potential).__name__}")


def eval_gradient(potential: PotentialSpec, point):
    """Analytic gradient of the potential (scalar for 1-D, pair for 2-D)."""
    if isinstance(potential, Polynomial1D):
        x = np.asarray(point, dtype=float)
        c = potential.coeffs
        out = c[1] + x * (2.0 * c[2] + x * (3.0 * c[3] + x * 4.0 * c[4]))
        return float(out) if np.ndim(point) == 0 else out
    if isinstance(potential, RadialPotential):
        r = np.asarray(point, dtype=float)
        if np.any(r <= 0):
            raise DomainError("radial potential is defined only for r > 0")
        cent = potential.hbar**2 * potential.l * (potential.l + 1) / (2.0 * potential.electron_mass)
        out = -2.0 * cent / r**3 + potential.charge_sq / r**2
        return float(out) if np.ndim(point) == 0 else out
    if isinstance(potential, Quartic2D):
        pt = np.asarray(point, dtype=float)
        x, y = pt[..., 0], pt[..., 1]
        gx = 2.0 * potential.v2 * x + 2.0 * potential.v22 * x * y * y + 4.0 * potential.v4 * x**3
        gy = 2.0 * potential.v2 * y + 2.0 * potential.v22 * x * x * y + 4.0 * potential.v4 * y**3
        return np.stack([gx, gy], axis=-1)
    raise TypeError(f"unknown potential spec {type(potential).__name__}")


@dataclass(frozen=True)
class SymmetryCheck:
    name: str
    value: float
    uncertainty: float | None
    threshold: float
    ok: bool


@dataclass(frozen=True)
class SymmetryReport:
    checks: tuple[SymmetryCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def violations(self) -> tuple[SymmetryCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def _check(name: str, value: float, err: float | None, tol: float) -> SymmetryCheck:
    threshold = max(tol, err) if err is not None else tol
    return SymmetryCheck(name, value, err, threshold, abs(value) <= threshold)


def validate_symmetries(params, tolerance: float = 1e-6) -> SymmetryReport:
    """Check that fitted coefficients honor the symmetries of the ansatz.

    For 1-D parameter sets the odd coefficients v1, v3 are checked; for 2-D
    sets the diagnostic cross terms.  A coefficient passes if its magnitude
    is below max(tolerance, its own fit uncertainty).  Report-only, never
    raises.
    """
    if isinstance(params, QuantumActionParams1D):
        errs = params.v_tilde_err or (None,) * 5
        checks = [
            _check("v_tilde_1", params.v_tilde[1], errs[1], tolerance),
            _check("v_tilde_3", params.v_tilde[3], errs[3], tolerance),
        ]
        return SymmetryReport(tuple(checks))
    if isinstance(params, QuantumActionParams2D):
        if params.cross_terms is None:
            return SymmetryReport(())
        checks = [
            _check(name, value, err, tolerance)
            for name, value, err in params.cross_terms.as_items()
        ]
        return SymmetryReport(tuple(checks))
    raise TypeError(f"unsupported parameter set {type(params).__name__}")
