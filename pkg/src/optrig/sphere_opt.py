"""Seeded multi-restart minimization of real objectives on the complex unit sphere.

The engine is projected gradient descent: steepest descent in the ambient
space, projected onto the tangent space of the sphere, retracted by
renormalization, with Armijo backtracking on the step size.

Objective convention: a return of +inf marks a rejected point (for example
inside a ||Tx|| ~ 0 guard region); the line search skips such candidates and
starting points are resampled. NaN or -inf raises NonFiniteObjective.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NonFiniteObjective
from .linalg import haar_unit_vector

Objective = Callable[[np.ndarray], float]
Gradient = Callable[[np.ndarray], np.ndarray]

_ARMIJO = 1e-4
_FD_STEP = 1e-6
_MAX_STEP = 1e6
_START_ATTEMPTS = 100


@dataclass(frozen=True)
class SphereOptConfig:
    """Restart count, iteration budget, tolerances, and base seed."""

    restarts: int = 32
    max_iters: int = 500
    step_tol: float = 1e-12
    value_tol: float = 1e-10
    seed: int = 0

    def __post_init__(self) -> None:
        if self.restarts < 1 or self.max_iters < 1:
            raise ValueError("restarts and max_iters must be >= 1")
        if self.step_tol <= 0 or self.value_tol <= 0:
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class SphereOptResult:
    value: float
    argmin: np.ndarray
    converged: bool
    restarts_agreeing: int


def _checked(objective: Objective, x: np.ndarray) -> float:
    v = float(objective(x))
    if np.isnan(v) or v == -np.inf:
        raise NonFiniteObjective("objective returned NaN or -inf on the sphere")
    return v


def _fd_gradient(objective: Objective, x: np.ndarray, fx: float) -> np.ndarray:
    """Central-difference gradient, falling back to one-sided differences
    when a probe lands in a rejected (+inf) region next to the iterate."""
    n = x.size
    g = np.zeros(n, dtype=np.complex128)
    h = _FD_STEP
    for j in range(n):
        parts = []
        for direction in (1.0, 1.0j):
            e = np.zeros(n, dtype=np.complex128)
            e[j] = direction
            up = x + h * e
            dn = x - h * e
            fu = _checked(objective, up / np.linalg.norm(up))
            fd = _checked(objective, dn / np.linalg.norm(dn))
            if np.isfinite(fu) and np.isfinite(fd):
                parts.append((fu - fd) / (2.0 * h))
            elif np.isfinite(fu):
                parts.append((fu - fx) / h)
            elif np.isfinite(fd):
                parts.append((fx - fd) / h)
            else:
                # rejected on both sides: no usable slope in this coordinate
                parts.append(0.0)
        g[j] = parts[0] + 1.0j * parts[1]
    return g


def _run_restart(
    objective: Objective,
    gradient: Gradient | None,
    n: int,
    cfg: SphereOptConfig,
    restart_index: int,
) -> tuple[float, np.ndarray, bool]:
    seq = np.random.SeedSequence(entropy=cfg.seed, spawn_key=(restart_index,))
    rng = np.random.default_rng(seq)
    x = None
    fx = np.inf
    for _ in range(_START_ATTEMPTS):
        cand = haar_unit_vector(rng, n)
        f = _checked(objective, cand)
        if f != np.inf:
            x, fx = cand, f
            break
    if x is None:
        raise NonFiniteObjective("objective rejected every sampled starting point")

    converged = False
    t = 1.0
    flat_streak = 0
    for _ in range(cfg.max_iters):
        g = gradient(x) if gradient is not None else _fd_gradient(objective, x, fx)
        gt = g - np.real(np.vdot(x, g)) * x
        gn2 = float(np.real(np.vdot(gt, gt)))
        if not np.isfinite(gn2):
            raise NonFiniteObjective("gradient evaluated to a non-finite value")
        if gn2 <= 1e-30:
            converged = True
            break
        t = min(2.0 * t, _MAX_STEP)
        accepted = None
        while t >= cfg.step_tol:
            cand = x - t * gt
            cand = cand / np.linalg.norm(cand)
            fc = _checked(objective, cand)
            if fc <= fx - _ARMIJO * t * gn2:
                # The first step passing the weak decrease test can be the
                # oscillating overshoot of a quadratic valley (it flips the
                # iterate across the basin with barely any drop). Greedily
                # probe half steps and keep them while they do better.
                while t >= 2.0 * cfg.step_tol:
                    half = x - 0.5 * t * gt
                    half = half / np.linalg.norm(half)
                    fh = _checked(objective, half)
                    if fh < fc:
                        t *= 0.5
                        cand, fc = half, fh
                    else:
                        break
                accepted = (cand, fc)
                break
            t *= 0.5
        if accepted is None:
            converged = True
            break
        drop = fx - accepted[1]
        x, fx = accepted
        # relative to |f| with a value_tol^2 floor so objectives bottoming
        # out at zero keep descending instead of stalling at ~value_tol
        if drop <= cfg.value_tol * (abs(fx) + cfg.value_tol):
            flat_streak += 1
            if flat_streak >= 3:
                converged = True
                break
        else:
            flat_streak = 0
    return fx, x, converged


def minimize_on_sphere(
    objective: Objective,
    n: int,
    cfg: SphereOptConfig | None = None,
    gradient: Gradient | None = None,
) -> SphereOptResult:
    """Minimize a real objective over unit vectors in C^n.

    Deterministic given cfg.seed: each restart draws from its own derived
    seed, the winner is the lowest value with ties broken by the lowest
    restart index. restarts_agreeing counts restarts whose final value lies
    within value_tol of the winner.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    cfg = cfg if cfg is not None else SphereOptConfig()
    best: tuple[float, np.ndarray, bool] | None = None
    finals = []
    for k in range(cfg.restarts):
        fx, x, conv = _run_restart(objective, gradient, n, cfg, k)
        finals.append(fx)
        if best is None or fx < best[0]:
            best = (fx, x, conv)
    assert best is not None
    agreeing = sum(1 for v in finals if v <= best[0] + cfg.value_tol)
    return SphereOptResult(
        value=best[0], argmin=best[1], converged=best[2], restarts_agreeing=agreeing
    )


def maximize_on_sphere(
    objective: Objective,
    n: int,
    cfg: SphereOptConfig | None = None,
    gradient: Gradient | None = None,
) -> SphereOptResult:
    """Maximize a real objective over unit vectors in C^n.

    Rejected points are marked by -inf here (sign-flipped sentinel).
    """

    def neg(x: np.ndarray) -> float:
        return -objective(x)

    neg_grad: Gradient | None = None
    if gradient is not None:
        neg_grad = lambda x: -gradient(x)  # noqa: E731
    r = minimize_on_sphere(neg, n, cfg, gradient=neg_grad)
    return SphereOptResult(
        value=-r.value,
        argmin=r.argmin,
        converged=r.converged,
        restarts_agreeing=r.restarts_agreeing,
    )
