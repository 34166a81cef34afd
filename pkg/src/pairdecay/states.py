"""States, bases, and factories for a pair of two-level atoms.

Conventions used throughout the package:

* Single-atom basis: ``|1> = (1, 0)`` is the excited state, ``|0> = (0, 1)``
  the ground state.
* Two-atom product basis (canonical order)::

      f1 = |1>|1>,  f2 = |1>|0>,  f3 = |0>|1>,  f4 = |0>|0>

  so a density matrix is the ordinary Kronecker product layout and
  ``rho[0, 3]`` is the coherence between the doubly excited and doubly
  ground states.
* Collective basis: ``|e> = f1``, ``|s> = (f2 + f3)/sqrt(2)``,
  ``|a> = (f2 - f3)/sqrt(2)``, ``|g> = f4``, ordered ``(e, s, a, g)``.

All matrices are plain complex ``numpy`` arrays; no wrapper class is
imposed on callers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian, NotPositive, TraceNotOne

__all__ = [
    "EXCITED",
    "GROUND",
    "SIGMA_1",
    "SIGMA_2",
    "SIGMA_3",
    "SIGMA_PLUS",
    "SIGMA_MINUS",
    "DEFAULT_HERM_TOL",
    "DEFAULT_TRACE_TOL",
    "DEFAULT_PSD_TOL",
    "validate_density",
    "hermitian_eigenvalues",
    "linear_entropy",
    "purity",
    "partial_trace",
    "CollectiveComponents",
    "canonical_to_collective",
    "collective_to_canonical",
    "is_x_class",
    "x_class_residual",
    "XStateParams",
    "x_state",
    "pure_with_concurrence",
    "werner",
    "mems",
    "maximally_mixed",
    "bell_phi",
    "random_density",
    "random_x_state",
    "to_state_json",
    "from_state_json",
    "load_state",
    "dump_state",
]

DEFAULT_HERM_TOL = 1e-9
DEFAULT_TRACE_TOL = 1e-9
DEFAULT_PSD_TOL = 1e-9

EXCITED = np.array([1.0, 0.0], dtype=complex)
GROUND = np.array([0.0, 1.0], dtype=complex)

SIGMA_1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
SIGMA_PLUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
SIGMA_MINUS = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)

# Columns are |e>, |s>, |a>, |g> expressed in the canonical basis.
_SQ2 = 1.0 / math.sqrt(2.0)
_V_COLLECTIVE = np.array(
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, _SQ2, _SQ2, 0.0],
        [0.0, _SQ2, -_SQ2, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ],
    dtype=complex,
)

# Anti-diagonal sparsity pattern: diagonal plus the (1,4) and (2,3) coherences.
_X_PATTERN = np.array(
    [
        [True, False, False, True],
        [False, True, True, False],
        [False, True, True, False],
        [True, False, False, True],
    ]
)


def validate_density(
    matrix,
    herm_tol: float = DEFAULT_HERM_TOL,
    trace_tol: float = DEFAULT_TRACE_TOL,
    psd_tol: float = DEFAULT_PSD_TOL,
) -> np.ndarray:
    """Check that ``matrix`` is a density matrix and return a cleaned copy.

    The returned array is exactly Hermitian (the anti-Hermitian part is
    discarded once it passes ``herm_tol``) with trace renormalized to one
    (only if the deviation is within ``trace_tol``).

    Raises
    ------
    NotHermitian
        ``max|M - M^dag|`` exceeds ``herm_tol``.
    TraceNotOne
        ``|tr(M) - 1|`` exceeds ``trace_tol`` (checked after symmetrizing).
    NotPositive
        The lowest eigenvalue is below ``-psd_tol``.
    """
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    herm_res = float(np.max(np.abs(m - m.conj().T)))
    if herm_res > herm_tol:
        raise NotHermitian(herm_res, herm_tol)
    m = 0.5 * (m + m.conj().T)
    tr = float(m.trace().real)
    if abs(tr - 1.0) > trace_tol:
        raise TraceNotOne(abs(tr - 1.0), trace_tol)
    m = m / tr
    w_min = float(np.linalg.eigvalsh(m)[0])
    if w_min < -psd_tol:
        raise NotPositive(-w_min, psd_tol)
    return m


def hermitian_eigenvalues(matrix, herm_tol: float = DEFAULT_HERM_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending."""
    m = np.asarray(matrix, dtype=complex)
    herm_res = float(np.max(np.abs(m - m.conj().T)))
    if herm_res > herm_tol:
        raise NotHermitian(herm_res, herm_tol)
    return np.linalg.eigvalsh(m)[::-1]


def purity(rho) -> float:
    """tr(rho^2), computed as the squared Frobenius norm (rho Hermitian)."""
    m = np.asarray(rho, dtype=complex)
    return float(np.vdot(m, m).real)


def linear_entropy(rho) -> float:
    """1 - tr(rho^2); zero exactly on pure states, 3/4 at the maximally mixed state."""
    return 1.0 - purity(rho)


def partial_trace(rho, keep: str = "A") -> np.ndarray:
    """Reduced single-atom state, tracing out the other atom.

    ``keep='A'`` returns the first atom's 2x2 state, ``keep='B'`` the second's.
    """
    m = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    if keep == "A":
        return np.trace(m, axis1=1, axis2=3)
    if keep == "B":
        return np.trace(m, axis1=0, axis2=2)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


@dataclass(frozen=True)
class CollectiveComponents:
    """Density-matrix entries in the collective basis, order (e, s, a, g).

    ``rho_xy`` denotes ``<x| rho |y>``. Only the upper triangle is stored;
    the conjugate entries are implied. Populations are real by construction.
    """

    rho_ee: float
    rho_ss: float
    rho_aa: float
    rho_gg: float
    rho_eg: complex = 0j
    rho_as: complex = 0j
    rho_ae: complex = 0j
    rho_ag: complex = 0j
    rho_se: complex = 0j
    rho_sg: complex = 0j

    def populations(self) -> np.ndarray:
        return np.array([self.rho_ee, self.rho_ss, self.rho_aa, self.rho_gg])

    def to_matrix(self) -> np.ndarray:
        """Full 4x4 matrix in the (e, s, a, g) ordering."""
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0] = self.rho_ee
        m[1, 1] = self.rho_ss
        m[2, 2] = self.rho_aa
        m[3, 3] = self.rho_gg
        m[0, 3] = self.rho_eg
        m[2, 1] = self.rho_as
        m[2, 0] = self.rho_ae
        m[2, 3] = self.rho_ag
        m[1, 0] = self.rho_se
        m[1, 3] = self.rho_sg
        m[3, 0] = np.conj(self.rho_eg)
        m[1, 2] = np.conj(self.rho_as)
        m[0, 2] = np.conj(self.rho_ae)
        m[3, 2] = np.conj(self.rho_ag)
        m[0, 1] = np.conj(self.rho_se)
        m[3, 1] = np.conj(self.rho_sg)
        return m

    @classmethod
    def from_matrix(cls, m) -> "CollectiveComponents":
        m = np.asarray(m, dtype=complex)
        return cls(
            rho_ee=float(m[0, 0].real),
            rho_ss=float(m[1, 1].real),
            rho_aa=float(m[2, 2].real),
            rho_gg=float(m[3, 3].real),
            rho_eg=complex(m[0, 3]),
            rho_as=complex(m[2, 1]),
            rho_ae=complex(m[2, 0]),
            rho_ag=complex(m[2, 3]),
            rho_se=complex(m[1, 0]),
            rho_sg=complex(m[1, 3]),
        )


def canonical_to_collective(rho) -> CollectiveComponents:
    """Re-express a canonical-basis density matrix in the collective basis."""
    m = np.asarray(rho, dtype=complex)
    return CollectiveComponents.from_matrix(_V_COLLECTIVE.conj().T @ m @ _V_COLLECTIVE)


def collective_to_canonical(components: CollectiveComponents) -> np.ndarray:
    """Inverse of :func:`canonical_to_collective`."""
    return _V_COLLECTIVE @ components.to_matrix() @ _V_COLLECTIVE.conj().T


def x_class_residual(rho) -> float:
    """Largest modulus among entries outside the X sparsity pattern."""
    m = np.asarray(rho, dtype=complex)
    off = np.abs(m[~_X_PATTERN])
    return float(off.max()) if off.size else 0.0


def is_x_class(rho, tol: float = DEFAULT_HERM_TOL) -> bool:
    """True when every entry outside the anti-diagonal pattern is below ``tol``."""
    return x_class_residual(rho) <= tol


@dataclass(frozen=True)
class XStateParams:
    """Parameters of an X-pattern state: four populations and two coherences.

    Validation enforces unit trace, non-negative populations, and the two
    block positivity conditions ``|rho14|^2 <= rho11*rho44`` and
    ``|rho23|^2 <= rho22*rho33`` (each up to the positivity tolerance).
    """

    rho11: float
    rho22: float
    rho33: float
    rho44: float
    rho14: complex = 0j
    rho23: complex = 0j

    def __post_init__(self):
        pops = (self.rho11, self.rho22, self.rho33, self.rho44)
        low = min(pops)
        if low < -DEFAULT_PSD_TOL:
            raise NotPositive(-low, DEFAULT_PSD_TOL, "negative population")
        tr_res = abs(sum(pops) - 1.0)
        if tr_res > DEFAULT_TRACE_TOL:
            raise TraceNotOne(tr_res, DEFAULT_TRACE_TOL)
        outer = abs(self.rho14) ** 2 - self.rho11 * self.rho44
        if outer > DEFAULT_PSD_TOL:
            raise NotPositive(outer, DEFAULT_PSD_TOL, "outer 2x2 block")
        inner = abs(self.rho23) ** 2 - self.rho22 * self.rho33
        if inner > DEFAULT_PSD_TOL:
            raise NotPositive(inner, DEFAULT_PSD_TOL, "inner 2x2 block")


def x_state(params: XStateParams) -> np.ndarray:
    """Assemble and validate the density matrix for ``params``."""
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = params.rho11
    m[1, 1] = params.rho22
    m[2, 2] = params.rho33
    m[3, 3] = params.rho44
    m[0, 3] = params.rho14
    m[3, 0] = np.conj(params.rho14)
    m[1, 2] = params.rho23
    m[2, 1] = np.conj(params.rho23)
    return validate_density(m)


def pure_with_concurrence(c: float) -> np.ndarray:
    """Projector onto sqrt((1+w)/2)|11> + sqrt((1-w)/2)|00> with w = sqrt(1-c^2).

    The parameter ``c`` in [0, 1] is exactly the concurrence of the state;
    c = 1 gives the Bell state (f1 + f4)/sqrt(2), c = 0 a product state.
    """
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"concurrence parameter must lie in [0, 1], got {c}")
    w = math.sqrt(max(0.0, 1.0 - c * c))
    amp1 = math.sqrt((1.0 + w) / 2.0)
    amp4 = math.sqrt((1.0 - w) / 2.0)
    vec = np.array([amp1, 0.0, 0.0, amp4], dtype=complex)
    return np.outer(vec, vec.conj())


def bell_phi(sign: str = "+") -> np.ndarray:
    """Projector onto (f4 +/- f1)/sqrt(2)."""
    s = _parse_sign(sign)
    vec = np.array([s, 0.0, 0.0, 1.0], dtype=complex) / math.sqrt(2.0)
    return np.outer(vec, vec.conj())


def werner(p: float, sign: str = "+") -> np.ndarray:
    """Mixture p * Bell + (1-p)/4 * identity, with the Bell state (f4 +/- f1)/sqrt(2).

    Entangled for p > 1/3, nonlocal for p > 1/sqrt(2). Every scalar quantity
    in this package is independent of the sign choice.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing parameter must lie in [0, 1], got {p}")
    return p * bell_phi(sign) + (1.0 - p) * np.eye(4, dtype=complex) / 4.0


def mems(c: float) -> np.ndarray:
    """Maximally entangled mixed state with concurrence ``c``.

    Piecewise family: for c >= 2/3 the populations are (c/2, 0, 0, c/2) plus
    1 - c in f2; below 2/3 the corner populations freeze at 1/3. The f1-f4
    coherence is c/2 throughout.
    """
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"concurrence parameter must lie in [0, 1], got {c}")
    g = c / 2.0 if c >= 2.0 / 3.0 else 1.0 / 3.0
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = g
    m[3, 3] = g
    m[1, 1] = 1.0 - 2.0 * g
    m[0, 3] = c / 2.0
    m[3, 0] = c / 2.0
    return m


def maximally_mixed() -> np.ndarray:
    """The identity/4 fixed point of the dissipative dynamics."""
    return np.eye(4, dtype=complex) / 4.0


def random_density(seed=None, dim: int = 4) -> np.ndarray:
    """Random full-rank density matrix G G^dag / tr, G a complex Ginibre draw."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g @ g.conj().T
    return m / m.trace().real


def random_x_state(seed=None) -> np.ndarray:
    """Random valid X-pattern state with generic phases.

    Populations are a flat Dirichlet draw; each coherence modulus is a
    uniform fraction of its positivity bound, so states range from nearly
    pure-blocked to nearly diagonal.
    """
    rng = np.random.default_rng(seed)
    pops = rng.dirichlet(np.ones(4))
    r14 = math.sqrt(pops[0] * pops[3]) * rng.uniform(0.0, 1.0)
    r23 = math.sqrt(pops[1] * pops[2]) * rng.uniform(0.0, 1.0)
    ph14, ph23 = rng.uniform(0.0, 2.0 * math.pi, size=2)
    params = XStateParams(
        rho11=pops[0],
        rho22=pops[1],
        rho33=pops[2],
        rho44=pops[3],
        rho14=r14 * complex(math.cos(ph14), math.sin(ph14)),
        rho23=r23 * complex(math.cos(ph23), math.sin(ph23)),
    )
    return x_state(params)


def _parse_sign(sign) -> float:
    if sign in ("+", 1, +1.0):
        return 1.0
    if sign in ("-", -1, -1.0):
        return -1.0
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


_STATE_BASIS_TAG = "canonical-f1f2f3f4"


def to_state_json(rho) -> dict:
    """JSON-serializable form: basis tag plus row-major real and imaginary parts."""
    m = np.asarray(rho, dtype=complex).reshape(16)
    return {
        "basis": _STATE_BASIS_TAG,
        "re": [float(v) for v in m.real],
        "im": [float(v) for v in m.imag],
    }


def from_state_json(obj, **tol) -> np.ndarray:
    """Parse and validate a state dictionary produced by :func:`to_state_json`."""
    if not isinstance(obj, dict):
        raise ValueError("state document must be a JSON object")
    if obj.get("basis") != _STATE_BASIS_TAG:
        raise ValueError(f"unsupported basis tag {obj.get('basis')!r}")
    re = obj.get("re")
    im = obj.get("im")
    if not isinstance(re, list) or not isinstance(im, list):
        raise ValueError("state document needs 're' and 'im' arrays")
    if len(re) != 16 or len(im) != 16:
        raise ValueError("'re' and 'im' must each hold 16 entries")
    m = (np.asarray(re, dtype=float) + 1j * np.asarray(im, dtype=float)).reshape(4, 4)
    return validate_density(m, **tol)


def load_state(path, **tol) -> np.ndarray:
    """Read a state JSON file, validating structure and physicality."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed state file {path}: {exc}") from exc
    return from_state_json(obj, **tol)


def dump_state(rho, path) -> None:
    """Write a state to a JSON file in the canonical layout."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_state_json(rho), fh, indent=2)
        fh.write("\n")
