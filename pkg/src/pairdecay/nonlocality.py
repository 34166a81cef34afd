"""Bell-inequality violation via the correlation-matrix criterion.

A two-qubit state violates some CHSH inequality exactly when the sum of
the two largest eigenvalues of T^t T exceeds 1, where T is the 3x3 matrix
of Pauli correlations. That sum is computed here with a Hermitian
eigensolver; closed-form shortcuts exist for the evolved superposition
family but are never fed back into solvers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonRealCorrelation
from .states import SIGMA_1, SIGMA_2, SIGMA_3, validate_density

__all__ = [
    "correlation_matrix",
    "horodecki_m",
    "violation_degree",
    "EvolvedPureM",
    "horodecki_m_pure",
]

_IMAG_TOL = 1e-9
_PAULI_KRON = tuple(
    tuple(np.kron(sn, sm) for sm in (SIGMA_1, SIGMA_2, SIGMA_3))
    for sn in (SIGMA_1, SIGMA_2, SIGMA_3)
)


def correlation_matrix(rho) -> np.ndarray:
    """Real 3x3 matrix of correlations tr(rho sigma_n x sigma_m).

    Each entry is real for Hermitian input; a residual imaginary part above
    1e-9 raises NonRealCorrelation rather than being silently discarded.
    """
    m = validate_density(rho)
    t = np.empty((3, 3))
    worst_imag = 0.0
    for n in range(3):
        for k in range(3):
            val = complex(np.einsum("ij,ji->", m, _PAULI_KRON[n][k]))
            worst_imag = max(worst_imag, abs(val.imag))
            t[n, k] = val.real
    if worst_imag > _IMAG_TOL:
        raise NonRealCorrelation(worst_imag, _IMAG_TOL)
    return t


def horodecki_m(rho) -> float:
    """Sum of the two largest eigenvalues of T^t T.

    Values above 1 certify a CHSH violation; the maximum over all states
    is 2, attained by maximally entangled pure states.
    """
    t = correlation_matrix(rho)
    u = np.linalg.eigvalsh(t.T @ t)
    return float(u[-1] + u[-2])


def violation_degree(rho) -> float:
    """max(0, horodecki_m(rho) - 1): zero exactly on the local side."""
    return max(0.0, horodecki_m(rho) - 1.0)


@dataclass(frozen=True)
class EvolvedPureM:
    """Closed-form criterion value for an evolved pure superposition state.

    ``fixed_order_value`` sums the pair of correlation eigenvalues that is
    largest near t = 0. Once e^{-4 gamma t} drops below c^2 the ordering
    switches and ``value`` (which takes the max) keeps following the
    eigensolver while ``fixed_order_value`` does not.
    """

    value: float
    fixed_order_value: float
    fixed_order_valid: bool


def horodecki_m_pure(c: float, t: float, gamma: float = 1.0) -> EvolvedPureM:
    """Criterion value along the trajectory of pure_with_concurrence(c).

    The eigenvalues of T^t T are {c^2 x, c^2 x, x^2} with x = e^{-4 gamma t},
    so value = c^2 x + max(c^2 x, x^2).
    """
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"concurrence parameter must lie in [0, 1], got {c}")
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    x = math.exp(-4.0 * gamma * t)
    cc = c * c
    fixed = x * x + cc * x
    value = cc * x + max(cc * x, x * x)
    return EvolvedPureM(value=value, fixed_order_value=fixed, fixed_order_valid=x >= cc)
