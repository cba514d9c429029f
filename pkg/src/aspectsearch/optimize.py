"""Numerical exploration of the no-detection landscape.

All searches fix the first angle at 0; the objective is invariant under a
common rotation of every look, so this only removes a flat direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ProblemTooLarge, ValidationError
from .profile import DetectionProfile
from .quadrature import AngleVector, _resolve_rule, as_angles, gradient, no_detection_probability

__all__ = [
    "OptimizationResult",
    "StationarityReport",
    "stationarity_check",
    "local_minimize",
    "lattice",
    "lattice_values",
    "grid_search",
    "ARMIJO_C",
    "ARMIJO_SHRINK",
    "INITIAL_STEP",
]

ARMIJO_C = 1e-4
ARMIJO_SHRINK = 0.5
INITIAL_STEP = 0.5
MAX_BACKTRACKS = 60
MAX_LATTICE_POINTS = 2_000_000
# relative width of a value tie in grid search
TIE_RTOL = 1e-14


@dataclass(frozen=True)
class OptimizationResult:
    angles: AngleVector
    value: float
    gradient_norm: float
    iterations: int
    converged: bool

    def to_dict(self) -> dict:
        return {
            "angles": list(self.angles.angles),
            "value": self.value,
            "gradient_norm": self.gradient_norm,
            "iterations": self.iterations,
            "converged": self.converged,
        }


@dataclass(frozen=True)
class StationarityReport:
    gradient_norm: float
    stationary: bool


def stationarity_check(profile: DetectionProfile, mu, rule=None, tol: float = 1e-10) -> StationarityReport:
    if not tol > 0:
        raise ValidationError(f"tol must be positive, got {tol}")
    norm = float(np.max(np.abs(gradient(profile, mu, rule))))
    return StationarityReport(norm, norm <= tol)


def _finish(profile, y, rule, iterations, converged):
    angles = np.concatenate(([0.0], y))
    angles = np.sort(np.array(AngleVector(tuple(angles)).normalized().angles))
    value = no_detection_probability(profile, angles, rule)
    grad_norm = float(np.max(np.abs(gradient(profile, angles, rule))))
    return OptimizationResult(AngleVector(tuple(angles)), value, grad_norm, iterations, converged)


def local_minimize(profile: DetectionProfile, n: int, init="random", rule=None, *,
                   max_iter: int = 500, tol: float = 1e-10, seed=None) -> OptimizationResult:
    """Gradient descent with Armijo backtracking from ``init``.

    Parameters
    ----------
    profile : DetectionProfile
    n : int
        Number of looks, at least 2.
    init : array_like or "random"
        Starting angles (length ``n``; rotated so the first is 0) or
        ``"random"`` to draw ``n - 1`` angles uniformly on ``[0, pi)``.
    max_iter, tol
        Stop after ``max_iter`` accepted steps or once the sup-norm of the
        full gradient is at most ``tol``.
    seed
        Seed for ``init="random"``.

    Returns
    -------
    OptimizationResult
        Angles normalised to ``[0, pi)`` and sorted. ``converged`` is False
        when the iteration budget runs out or the line search stalls.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
        raise ValidationError(f"local_minimize needs n >= 2, got {n!r}")
    rule = _resolve_rule(profile, n, rule)

    if isinstance(init, str):
        if init != "random":
            raise ValidationError(f"init must be angles or 'random', got {init!r}")
        y = np.random.default_rng(seed).uniform(0.0, np.pi, size=n - 1)
    else:
        start = as_angles(init)
        if start.size != n:
            raise ValidationError(f"init has {start.size} angles, expected {n}")
        y = start[1:] - start[0]

    def objective(y):
        return no_detection_probability(profile, np.concatenate(([0.0], y)), rule)

    def full_gradient(y):
        return gradient(profile, np.concatenate(([0.0], y)), rule)

    f = objective(y)
    grad = full_gradient(y)
    iterations = 0
    converged = False
    while True:
        if np.max(np.abs(grad)) <= tol:
            converged = True
            break
        if iterations >= max_iter:
            break
        direction = -grad[1:]
        slope = float(direction @ direction)
        step = INITIAL_STEP
        for _ in range(MAX_BACKTRACKS):
            trial = y + step * direction
            f_trial = objective(trial)
            wanted = ARMIJO_C * step * slope
            # below roundoff the Armijo decrease is unmeasurable; require no increase
            if f_trial <= f - wanted or (wanted <= 8 * np.finfo(float).eps * abs(f) and f_trial <= f):
                break
            step *= ARMIJO_SHRINK
        else:
            break
        y, f = trial, f_trial
        grad = full_gradient(y)
        iterations += 1

    return _finish(profile, y, rule, iterations, converged)


def lattice(resolution: float) -> np.ndarray:
    """Angles ``0, res, 2 res, ...`` strictly below pi."""
    if not (resolution > 0 and math.isfinite(resolution)):
        raise ValidationError(f"resolution must be positive, got {resolution}")
    count = int(math.floor(np.pi / resolution - 1e-9)) + 1
    return np.arange(count) * resolution


def lattice_values(profile: DetectionProfile, n: int, resolution: float, rule=None):
    """Objective on the full lattice with the first angle pinned at 0.

    Returns the 1-D lattice and an array of shape ``(L,) * (n - 1)`` whose
    entry ``[k_1, ..., k_{n-1}]`` is the value at angles
    ``(0, k_1 res, ..., k_{n-1} res)``.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
        raise ValidationError(f"lattice evaluation needs n >= 2, got {n!r}")
    rule = _resolve_rule(profile, n, rule)
    grid = lattice(resolution)
    size = grid.size ** (n - 1)
    if size > MAX_LATTICE_POINTS:
        raise ProblemTooLarge(f"{size} lattice points exceed the limit of {MAX_LATTICE_POINTS}")

    table = profile(rule.nodes[:, None] + grid[None, :])  # (M, L)
    base = table[:, 0]
    if n == 2:
        return grid, (base @ table) / rule.node_count

    values = np.empty((grid.size,) * (n - 1))
    for k in range(grid.size):
        acc = (base * table[:, k])[:, None]
        for _ in range(n - 2):
            acc = (acc[:, :, None] * table[:, None, :]).reshape(rule.node_count, -1)
        values[k] = acc.sum(axis=0).reshape((grid.size,) * (n - 2)) / rule.node_count
    return grid, values


def grid_search(profile: DetectionProfile, n: int, resolution: float = np.pi / 360, rule=None) -> OptimizationResult:
    """Exhaustive lattice minimisation for ``n`` in {2, 3}.

    Ties (values within a relative ``1e-14``) go to the lexicographically
    smallest lattice point.
    """
    if n not in (2, 3):
        raise ProblemTooLarge(f"grid search supports n in {{2, 3}}, got {n}")
    rule = _resolve_rule(profile, n, rule)
    grid, values = lattice_values(profile, n, resolution, rule)
    flat = values.ravel()
    best = flat.min()
    first = int(np.flatnonzero(flat <= best + TIE_RTOL * max(1.0, abs(best)))[0])
    index = np.unravel_index(first, values.shape)
    angles = np.concatenate(([0.0], grid[list(index)]))
    value = no_detection_probability(profile, angles, rule)
    grad_norm = float(np.max(np.abs(gradient(profile, angles, rule))))
    return OptimizationResult(AngleVector(tuple(angles)), value, grad_norm, int(flat.size), True)
