"""Two-qubit state containers and Bloch-representation helpers.

Basis ordering everywhere is |ee>, |eg>, |ge>, |gg|, with the first letter
referring to atom 1 and the second to atom 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidStateError

TOL_TRACE = 1e-12
TOL_HERM = 1e-12
TOL_PSD = 1e-10

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)
IDENTITY2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class XState:
    """X-form two-qubit density matrix.

    Populations ``a, b, c, d`` occupy the diagonal (|ee>, |eg>, |ge>, |gg>),
    ``w`` is the |ee><gg| coherence and ``z`` the |eg><ge| one; every other
    entry vanishes.
    """

    a: float
    b: float
    c: float
    d: float
    w: complex = 0.0
    z: complex = 0.0

    def validate(self, tol_trace: float = TOL_TRACE, tol_psd: float = TOL_PSD) -> "XState":
        """Check trace normalization and X-form positivity; return self."""
        pops = (self.a, self.b, self.c, self.d)
        if min(pops) < -tol_psd:
            raise InvalidStateError(f"negative population in {pops}")
        trace = self.a + self.b + self.c + self.d
        if abs(trace - 1.0) > tol_trace:
            raise InvalidStateError(f"trace {trace!r} deviates from 1 beyond {tol_trace}")
        if abs(self.w) ** 2 > self.a * self.d + tol_psd:
            raise InvalidStateError("|w|^2 exceeds a*d: not positive semidefinite")
        if abs(self.z) ** 2 > self.b * self.c + tol_psd:
            raise InvalidStateError("|z|^2 exceeds b*c: not positive semidefinite")
        return self

    def to_matrix(self) -> np.ndarray:
        """Embed into a dense 4x4 complex density matrix."""
        w = complex(self.w)
        z = complex(self.z)
        return np.array(
            [
                [self.a, 0.0, 0.0, w],
                [0.0, self.b, z, 0.0],
                [0.0, z.conjugate(), self.c, 0.0],
                [w.conjugate(), 0.0, 0.0, self.d],
            ],
            dtype=complex,
        )


@dataclass(frozen=True)
class BlochForm:
    """Local Bloch vectors x, y and the 3x3 correlation matrix t."""

    x: np.ndarray
    y: np.ndarray
    t: np.ndarray

    @property
    def x3(self) -> float:
        return float(self.x[2])

    @property
    def y3(self) -> float:
        return float(self.y[2])

    @property
    def t11(self) -> float:
        return float(self.t[0, 0])

    @property
    def t22(self) -> float:
        return float(self.t[1, 1])

    @property
    def t33(self) -> float:
        return float(self.t[2, 2])


def bloch_decompose(s: XState) -> BlochForm:
    """Bloch vectors and correlation matrix of a valid X state.

    For X states the local vectors point along z and the correlation matrix
    is confined to its upper-left 2x2 block plus the (3,3) entry.
    """
    s.validate()
    w = complex(s.w)
    z = complex(s.z)
    x = np.array([0.0, 0.0, s.a + s.b - s.c - s.d])
    y = np.array([0.0, 0.0, s.a - s.b + s.c - s.d])
    t = np.zeros((3, 3))
    t[0, 0] = 2.0 * (w + z).real
    t[0, 1] = 2.0 * (z - w).imag
    t[1, 0] = -2.0 * (w + z).imag
    t[1, 1] = 2.0 * (z - w).real
    t[2, 2] = s.a - s.b - s.c + s.d
    return BlochForm(x=x, y=y, t=t)


def bloch_compose(form: BlochForm) -> np.ndarray:
    """Rebuild the 4x4 density matrix from local vectors and correlations."""
    rho = np.kron(IDENTITY2, IDENTITY2).astype(complex)
    for j in range(3):
        rho += form.x[j] * np.kron(PAULIS[j], IDENTITY2)
        rho += form.y[j] * np.kron(IDENTITY2, PAULIS[j])
        for k in range(3):
            rho += form.t[j, k] * np.kron(PAULIS[j], PAULIS[k])
    return rho / 4.0


def check_density_matrix(
    rho: np.ndarray,
    tol_trace: float = TOL_TRACE,
    tol_herm: float = TOL_HERM,
    tol_psd: float = TOL_PSD,
) -> np.ndarray:
    """Validate a 4x4 density matrix (hermiticity, unit trace, positivity)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidStateError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol_herm:
        raise InvalidStateError("matrix is not Hermitian within tolerance")
    trace = np.trace(rho).real
    if abs(trace - 1.0) > tol_trace:
        raise InvalidStateError(f"trace {trace!r} deviates from 1 beyond {tol_trace}")
    if np.min(np.linalg.eigvalsh(rho)) < -tol_psd:
        raise InvalidStateError("matrix has an eigenvalue below -tol_psd")
    return rho
