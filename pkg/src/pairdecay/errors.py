"""Exception types raised by state validation, dynamics, and solvers.

Every exception carries the offending residual (or value) so callers can
report how badly a check failed, not just that it failed.
"""

from __future__ import annotations

__all__ = [
    "PairdecayError",
    "NotHermitian",
    "TraceNotOne",
    "NotPositive",
    "NotXClass",
    "NotPure",
    "NonRealCorrelation",
    "ComplexRoot",
    "NoBracket",
]


class PairdecayError(ValueError):
    """Base class for all domain errors in this package."""


class _ResidualError(PairdecayError):
    """Error with a numeric residual and the tolerance it exceeded."""

    label = "residual"

    def __init__(self, residual: float, tol: float, detail: str = ""):
        self.residual = float(residual)
        self.tol = float(tol)
        msg = f"{self.label} {self.residual:.3e} exceeds tolerance {self.tol:.1e}"
        if detail:
            msg = f"{detail}: {msg}"
        super().__init__(msg)


class NotHermitian(_ResidualError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""

    label = "hermiticity residual max|M - M^dag|"


class TraceNotOne(_ResidualError):
    """Trace differs from one beyond tolerance."""

    label = "trace residual |tr(M) - 1|"


class NotPositive(_ResidualError):
    """Most negative eigenvalue (or an equivalent witness) is below -tolerance."""

    label = "negativity"


class NotXClass(_ResidualError):
    """State has support outside the anti-diagonal X pattern."""

    label = "largest off-pattern modulus"


class NotPure(_ResidualError):
    """State is mixed where a pure state (projector) is required."""

    label = "linear entropy"


class NonRealCorrelation(_ResidualError):
    """A Pauli correlation came out with a non-negligible imaginary part."""

    label = "largest imaginary part"


class ComplexRoot(PairdecayError):
    """A closed-form square root received a negative radicand."""

    def __init__(self, radicand: float):
        self.radicand = float(radicand)
        super().__init__(f"negative radicand {self.radicand:.3e} in closed form")


class NoBracket(PairdecayError):
    """Root bracketing ran out of range without finding a sign change."""

    def __init__(self, t_max: float, value: float):
        self.t_max = float(t_max)
        self.value = float(value)
        super().__init__(
            f"no sign change up to dimensionless time {self.t_max:g} "
            f"(last value {self.value:.3e})"
        )
