"""Variational upper bound on the trace-norm distance to classical states.

The search minimizes ||rho - chi||_1 over classical-quantum states
chi = p P1 x rho1 + (1-p) P2 x rho2, where P1, P2 are orthogonal projectors
on the first qubit (two angles), rho1, rho2 are arbitrary single-qubit states
(three Bloch components each) and p is the mixing weight: nine parameters in
total. Every evaluated chi is feasible, so the returned value is a rigorous
upper bound on the true minimum; it serves as an independent check of the
X-state closed form, with which it shares no code path.

The minimum found coincides numerically with the doubled closed-form
convention (a maximally entangled pure state gives 1), so no extra factor is
applied to the result.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .errors import ConvergenceError
from .states import IDENTITY2, PAULIS, check_density_matrix


@dataclass(frozen=True)
class SearchBudget:
    """Effort knobs: seed grid resolution per axis (angles and weight),
    number of seeds refined locally, iteration cap per refinement, and the
    improvement below which the search counts as stalled-out clean."""

    seeds_per_axis: int = 12
    top_k: int = 6
    refine_steps: int = 200
    stall_tol: float = 1e-6


def _projectors(theta: float, phi: float):
    n = np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])
    n_sigma = sum(n[j] * PAULIS[j] for j in range(3))
    p1 = 0.5 * (IDENTITY2 + n_sigma)
    return p1, IDENTITY2 - p1


def _qubit_state(r: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(r)
    if norm > 1.0:
        r = r / norm
    return 0.5 * (IDENTITY2 + sum(r[j] * PAULIS[j] for j in range(3)))


def _classical_quantum(params: np.ndarray) -> np.ndarray:
    theta, phi, p = params[0], params[1], min(max(params[2], 0.0), 1.0)
    p1, p2 = _projectors(theta, phi)
    chi = p * np.kron(p1, _qubit_state(params[3:6]))
    chi += (1.0 - p) * np.kron(p2, _qubit_state(params[6:9]))
    return chi


def _trace_norm(m: np.ndarray) -> float:
    return float(np.sum(np.abs(np.linalg.eigvalsh(m))))


def _conditional_seed(rho: np.ndarray, theta: float, phi: float) -> np.ndarray:
    """Feasible 9-parameter point built from measuring rho in the (theta, phi)
    basis: conditional states of qubit B and the matching weight."""
    p1, _ = _projectors(theta, phi)
    seed = np.empty(9)
    seed[0], seed[1] = theta, phi
    blocks = []
    for proj in (p1, IDENTITY2 - p1):
        big = np.kron(proj, IDENTITY2)
        sub = big @ rho @ big
        weight = np.trace(sub).real
        if weight > 1e-12:
            cond = np.trace(sub.reshape(2, 2, 2, 2), axis1=0, axis2=2) / weight
            bloch = [np.trace(cond @ PAULIS[j]).real for j in range(3)]
        else:
            bloch = [0.0, 0.0, 0.0]
        blocks.append((weight, bloch))
    seed[2] = blocks[0][0]
    seed[3:6] = blocks[0][1]
    seed[6:9] = blocks[1][1]
    return seed


def discord_1norm_variational(rho: np.ndarray, budget: SearchBudget | None = None) -> float:
    """Numerical trace-norm discord of a two-qubit state (doubled scale).

    Coarse grid seeding over measurement angles and weight, followed by local
    simplex refinement of the best seeds over all nine parameters. Raises
    ConvergenceError if a final restart still improves by more than the
    budget's stall tolerance.
    """
    rho = check_density_matrix(rho)
    budget = budget or SearchBudget()

    def objective(params: np.ndarray) -> float:
        return _trace_norm(rho - _classical_quantum(params))

    n = budget.seeds_per_axis
    thetas = np.linspace(0.0, np.pi, n)
    phis = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    weights = np.linspace(0.0, 1.0, n)

    seeds = []
    for theta in thetas:
        for phi in phis:
            base = _conditional_seed(rho, theta, phi)
            seeds.append((objective(base), base))
            for p in weights:
                trial = base.copy()
                trial[2] = p
                seeds.append((objective(trial), trial))
    seeds.sort(key=lambda item: item[0])

    best_value, best_params = seeds[0]
    for value, params in seeds[: budget.top_k]:
        result = optimize.minimize(
            objective,
            params,
            method="Nelder-Mead",
            options={"maxiter": budget.refine_steps, "xatol": 1e-7, "fatol": 1e-10},
        )
        if result.fun < best_value:
            best_value, best_params = float(result.fun), result.x

    restart = optimize.minimize(
        objective,
        best_params,
        method="Nelder-Mead",
        options={"maxiter": budget.refine_steps, "xatol": 1e-7, "fatol": 1e-10},
    )
    if best_value - restart.fun > budget.stall_tol and not restart.success:
        raise ConvergenceError(
            f"search still improving by {best_value - restart.fun:.2e} "
            "with the refinement budget exhausted"
        )
    return float(min(best_value, restart.fun))
