"""Concurrence, entanglement of formation, and separability tests.

The general concurrence follows the square-root construction valid for any
two-qubit state. X-pattern states additionally admit a two-branch closed
form, implemented twice (canonical entries and collective components) so
the routes can be cross-checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ComplexRoot, NotXClass
from .states import (
    DEFAULT_HERM_TOL,
    DEFAULT_PSD_TOL,
    SIGMA_2,
    canonical_to_collective,
    is_x_class,
    validate_density,
    x_class_residual,
)

__all__ = [
    "spin_flip",
    "concurrence",
    "ConcurrenceBreakdown",
    "concurrence_x",
    "concurrence_x_collective",
    "concurrence_x_evolved",
    "entanglement_of_formation",
    "partial_transpose",
    "is_separable_ppt",
]

_SYY = np.kron(SIGMA_2, SIGMA_2)

# Eigenvalues of the flipped product that are exact zeros in exact
# arithmetic surface as O(machine eps) noise for rank-deficient states;
# taking square roots would inflate that to ~1e-8, so anything this far
# below the top eigenvalue is treated as zero.
_REL_EIG_FLOOR = 1e-13


def spin_flip(rho) -> np.ndarray:
    """The two-qubit spin-flipped state (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y)."""
    m = np.asarray(rho, dtype=complex)
    return _SYY @ m.conj() @ _SYY


def concurrence(rho) -> float:
    """Concurrence of an arbitrary two-qubit state.

    Computes the eigenvalues of sqrt(rho) * spin_flip(rho) * sqrt(rho),
    whose square roots lam_i (descending) give
    max(0, lam_1 - lam_2 - lam_3 - lam_4).
    """
    m = validate_density(rho)
    w, u = np.linalg.eigh(m)
    w = np.clip(w, 0.0, None)
    sq = (u * np.sqrt(w)) @ u.conj().T
    h = sq @ spin_flip(m) @ sq
    h = 0.5 * (h + h.conj().T)
    mu = np.clip(np.linalg.eigvalsh(h), 0.0, None)
    if mu[-1] <= 0.0:
        return 0.0
    mu[mu < _REL_EIG_FLOOR * mu[-1]] = 0.0
    lam = np.sqrt(mu)
    return max(0.0, 2.0 * lam[-1] - lam.sum())


@dataclass(frozen=True)
class ConcurrenceBreakdown:
    """The two closed-form branches for an X-pattern state."""

    c1: float
    c2: float

    @property
    def value(self) -> float:
        return max(0.0, self.c1, self.c2)


def _require_x(rho, tol: float) -> np.ndarray:
    m = validate_density(rho)
    if not is_x_class(m, tol):
        raise NotXClass(x_class_residual(m), tol)
    return m


def concurrence_x(rho, tol: float = DEFAULT_HERM_TOL) -> ConcurrenceBreakdown:
    """Closed-form concurrence branches from the canonical matrix entries.

    c1 = 2(|rho14| - sqrt(rho22*rho33)) and c2 = 2(|rho23| - sqrt(rho11*rho44));
    the concurrence is max(0, c1, c2). At most one branch can be positive.
    """
    m = _require_x(rho, tol)
    d = m.diagonal().real
    c1 = 2.0 * (abs(m[0, 3]) - math.sqrt(max(0.0, d[1] * d[2])))
    c2 = 2.0 * (abs(m[1, 2]) - math.sqrt(max(0.0, d[0] * d[3])))
    return ConcurrenceBreakdown(c1=c1, c2=c2)


def concurrence_x_collective(rho, tol: float = DEFAULT_HERM_TOL) -> ConcurrenceBreakdown:
    """Same two branches, evaluated from collective-basis components.

    Kept as an independent route for cross-validation against
    :func:`concurrence_x`.
    """
    m = _require_x(rho, tol)
    comp = canonical_to_collective(m)
    re_as = comp.rho_as.real
    im_as = comp.rho_as.imag
    rad1 = (comp.rho_aa + comp.rho_ss) ** 2 - 4.0 * re_as * re_as
    rad2 = (comp.rho_ss - comp.rho_aa) ** 2 + 4.0 * im_as * im_as
    c1 = 2.0 * abs(comp.rho_eg) - math.sqrt(_checked_radicand(rad1))
    c2 = math.sqrt(_checked_radicand(rad2)) - 2.0 * math.sqrt(
        max(0.0, comp.rho_ee * comp.rho_gg)
    )
    return ConcurrenceBreakdown(c1=c1, c2=c2)


def concurrence_x_evolved(
    rho0, t: float, gamma: float = 1.0, tol: float = DEFAULT_HERM_TOL
) -> ConcurrenceBreakdown:
    """Closed-form concurrence branches of an X state after dissipative evolution.

    Evaluates the branch trajectories directly from the initial collective
    components, without constructing the evolved matrix. Agrees with
    ``concurrence_x(evolve_x_closed(rho0, t, gamma))``.
    """
    m = _require_x(rho0, tol)
    comp = canonical_to_collective(m)
    tau = float(gamma) * float(t)
    x2 = math.exp(-2.0 * tau)
    x4 = x2 * x2
    x8 = x4 * x4
    re_as = comp.rho_as.real
    im_as = comp.rho_as.imag
    ee, ss, aa, gg = comp.rho_ee, comp.rho_ss, comp.rho_aa, comp.rho_gg

    rad1 = (x4 * (aa + ss - 0.5) + 0.5) ** 2 - x4 * (2.0 * re_as) ** 2
    c1 = 2.0 * x2 * abs(comp.rho_eg) - math.sqrt(_checked_radicand(rad1))

    rad2a = (ss - aa) ** 2 + 4.0 * im_as * im_as
    rad2b = (
        1.0
        + x8 * (2.0 * ee + 2.0 * gg - 1.0) ** 2
        + 4.0 * x4 * (ee + gg - 0.5 - (ee - gg) ** 2)
    )
    c2 = x2 * math.sqrt(_checked_radicand(rad2a)) - 0.5 * math.sqrt(
        _checked_radicand(rad2b)
    )
    return ConcurrenceBreakdown(c1=c1, c2=c2)


def _checked_radicand(value: float) -> float:
    if value < -DEFAULT_PSD_TOL:
        raise ComplexRoot(value)
    return max(0.0, value)


def entanglement_of_formation(rho) -> float:
    """Entanglement of formation h((1 + sqrt(1 - C^2))/2), C the concurrence."""
    c = min(1.0, concurrence(rho))
    x = 0.5 * (1.0 + math.sqrt(max(0.0, 1.0 - c * c)))
    return _binary_entropy(x)


def _binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def partial_transpose(rho, subsystem: str = "B") -> np.ndarray:
    """Transpose on one tensor factor."""
    m = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    if subsystem == "B":
        return m.transpose(0, 3, 2, 1).reshape(4, 4)
    if subsystem == "A":
        return m.transpose(2, 1, 0, 3).reshape(4, 4)
    raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def is_separable_ppt(rho, tol: float = DEFAULT_PSD_TOL) -> bool:
    """Peres-Horodecki test, exact for two qubits.

    True when the partial transpose has no eigenvalue below ``-tol``.
    """
    m = validate_density(rho)
    w_min = float(np.linalg.eigvalsh(partial_transpose(m))[0])
    return w_min >= -tol
