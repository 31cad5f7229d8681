"""Correlation measures for two-qubit states.

Two quantities are computed: the trace-norm geometric quantum discord,
reported in the doubled normalization where a maximally entangled pure state
scores 1, and the Wootters concurrence. Both have exact closed forms on
X states; the concurrence also has a general 4x4 route used as a cross-check.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidStateError
from .states import SIGMA_Y, XState, bloch_decompose, check_density_matrix

# Threshold on the closed-form denominator below which the degenerate limit
# |t11| is returned instead of the 0/0 ratio.
DEGENERACY_ETA = 1e-12


def discord_doubled_from_bloch(x3, t11, t22, t33, eta: float = DEGENERACY_ETA):
    """Doubled trace-norm discord from X-state Bloch data (array-capable).

    Evaluates sqrt((t11^2*f1 - t22^2*f2) / (f1 - f2 + t11^2 - t22^2)) with
    f1 = max(t33^2, t22^2 + x3^2) and f2 = min(t33^2, t11^2), written as the
    weighted mean (t11^2*u + f2*v) / (u + v) with u = f1 - f2 and
    v = t11^2 - t22^2, which avoids cancellation when u is small. Where the
    denominator drops below ``eta`` the analytic limit |t11| is used.
    """
    x3 = np.asarray(x3, dtype=float)
    t11 = np.asarray(t11, dtype=float)
    t22 = np.asarray(t22, dtype=float)
    t33 = np.asarray(t33, dtype=float)

    t11s = t11 * t11
    t22s = t22 * t22
    t33s = t33 * t33
    f1 = np.maximum(t33s, t22s + x3 * x3)
    f2 = np.minimum(t33s, t11s)
    u = f1 - f2
    v = t11s - t22s
    den = u + v
    degenerate = np.abs(den) < eta
    safe_den = np.where(degenerate, 1.0, den)
    radicand = np.where(degenerate, 0.0, (t11s * u + f2 * v) / safe_den)
    if np.any(radicand < -eta):
        raise InvalidStateError(
            "negative radicand in the X-state discord formula; "
            "the input violates X-state positivity"
        )
    general = np.sqrt(np.clip(radicand, 0.0, None))
    return np.where(degenerate, np.abs(t11), general)


def discord_1norm_xstate(s: XState) -> float:
    """Doubled trace-norm geometric discord of a valid X state.

    Returns a value in [0, 1]; the even Bell state (|ee> + |gg>)/sqrt(2)
    scores exactly 1. For states with real w and z = 0 the formula reduces to
    2|w|.
    """
    form = bloch_decompose(s)
    return float(discord_doubled_from_bloch(form.x3, form.t11, form.t22, form.t33))


def concurrence_x_from_fields(a, b, c, d, abs_w, abs_z):
    """Concurrence of an X state from its entries (array-capable):
    2*max(0, |z| - sqrt(a*d), |w| - sqrt(b*c))."""
    a = np.asarray(a, dtype=float)
    d = np.asarray(d, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    term_z = np.asarray(abs_z, dtype=float) - np.sqrt(np.clip(a * d, 0.0, None))
    term_w = np.asarray(abs_w, dtype=float) - np.sqrt(np.clip(b * c, 0.0, None))
    return 2.0 * np.maximum(0.0, np.maximum(term_z, term_w))


def concurrence_xstate(s: XState) -> float:
    """Concurrence of a valid X state via the closed form."""
    s.validate()
    return float(
        concurrence_x_from_fields(s.a, s.b, s.c, s.d, abs(complex(s.w)), abs(complex(s.z)))
    )


def concurrence_general(rho: np.ndarray) -> float:
    """Wootters concurrence of an arbitrary two-qubit density matrix.

    Returns max(0, l1 - l2 - l3 - l4), the l_j being the decreasing square
    roots of the eigenvalues of rho (sy x sy) rho* (sy x sy). They are
    computed as the singular values of sqrt(rho) (sy x sy) sqrt(rho)*, which
    is the same spectrum obtained in a numerically stable way.
    """
    rho = check_density_matrix(rho)
    yy = np.kron(SIGMA_Y, SIGMA_Y)
    evals, evecs = np.linalg.eigh(rho)
    root = (evecs * np.sqrt(np.clip(evals, 0.0, None))) @ evecs.conj().T
    lams = np.linalg.svd(root @ yy @ root.conj(), compute_uv=False)
    lams = np.sort(lams)[::-1]
    return float(max(0.0, lams[0] - lams[1] - lams[2] - lams[3]))
