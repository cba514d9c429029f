"""Orientation-averaged no-detection probability and its gradient.

Integrals run over one period ``[-pi/2, pi/2)`` with the uniform midpoint
rule. For an integrand whose highest term is ``cos(2 k x)`` or
``sin(2 k x)`` the rule is exact as soon as ``k <= M - 1``. A product of
``n`` profile factors of maximum harmonic ``K`` has maximum harmonic
``n K``, so every routine here insists on ``M >= n K + 1`` and raises
:class:`~aspectsearch.errors.InsufficientNodes` otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InsufficientNodes, NonPositive, ValidationError
from .profile import DetectionProfile

__all__ = [
    "QuadratureRule",
    "AngleVector",
    "as_angles",
    "required_nodes",
    "default_rule",
    "integrate_periodic",
    "no_detection_probability",
    "gradient",
    "gradient_symmetric",
]

MIN_DEFAULT_NODES = 64


@dataclass(frozen=True)
class QuadratureRule:
    """Uniform midpoint rule with ``node_count`` nodes on one pi-period."""

    node_count: int

    def __post_init__(self):
        if isinstance(self.node_count, bool) or not isinstance(self.node_count, (int, np.integer)):
            raise ValidationError(f"node_count must be an integer, got {self.node_count!r}")
        if self.node_count < 1:
            raise NonPositive(f"node_count must be >= 1, got {self.node_count}")
        object.__setattr__(self, "node_count", int(self.node_count))

    @cached_property
    def nodes(self) -> np.ndarray:
        M = self.node_count
        return -np.pi / 2 + (np.arange(M) + 0.5) * (np.pi / M)

    @property
    def weight(self) -> float:
        return np.pi / self.node_count


@dataclass(frozen=True)
class AngleVector:
    """Observation angles in radians, relative to the target orientation."""

    angles: tuple[float, ...]

    def __post_init__(self):
        angles = tuple(float(a) for a in np.atleast_1d(np.asarray(self.angles, dtype=float)).ravel())
        if not angles:
            raise ValidationError("an angle vector needs at least one angle")
        if not all(math.isfinite(a) for a in angles):
            raise ValidationError(f"non-finite angle in {angles}")
        object.__setattr__(self, "angles", angles)

    def __len__(self):
        return len(self.angles)

    def __iter__(self):
        return iter(self.angles)

    def __array__(self, dtype=None, copy=None):
        return np.array(self.angles, dtype=dtype)

    def normalized(self) -> "AngleVector":
        """Map every angle into ``[0, pi)`` with floored modulo."""
        a = np.mod(np.array(self.angles), np.pi)
        # np.mod can round up to exactly pi for tiny negative inputs
        a[a >= np.pi] = 0.0
        return AngleVector(tuple(a))


def as_angles(mu) -> np.ndarray:
    """Validated 1-D float array from an :class:`AngleVector` or array-like."""
    if isinstance(mu, AngleVector):
        return np.array(mu.angles)
    return np.array(AngleVector(mu).angles)


def required_nodes(profile: DetectionProfile, n: int) -> int:
    """Smallest node count that integrates an ``n``-fold product exactly."""
    return n * profile.max_harmonic + 1


def default_rule(profile: DetectionProfile, n: int) -> QuadratureRule:
    """``max(n K + 1, 64)`` rounded up to a power of two."""
    need = max(required_nodes(profile, n), MIN_DEFAULT_NODES)
    return QuadratureRule(1 << (need - 1).bit_length())


def _resolve_rule(profile, n, rule):
    if rule is None:
        return default_rule(profile, n)
    if not isinstance(rule, QuadratureRule):
        rule = QuadratureRule(rule)
    need = required_nodes(profile, n)
    if rule.node_count < need:
        raise InsufficientNodes(rule.node_count, need)
    return rule


def integrate_periodic(f, rule: QuadratureRule) -> float:
    """Integrate a pi-periodic, vectorised ``f`` over one period.

    Exact up to roundoff for trigonometric polynomials in ``2x`` with
    maximum harmonic ``<= rule.node_count - 1``.
    """
    values = np.asarray(f(rule.nodes), dtype=float)
    return float(values.sum() * rule.weight)


def no_detection_probability(profile: DetectionProfile, mu, rule=None) -> float:
    """Probability that ``n`` independent looks at relative angles ``mu`` all miss.

    Averages ``prod_i g(x + mu_i)`` over a uniformly distributed target
    orientation ``x``.

    Parameters
    ----------
    profile : DetectionProfile
    mu : AngleVector or array_like
        Observation angles in radians.
    rule : QuadratureRule or int, optional
        Defaults to :func:`default_rule`. Must satisfy ``M >= n K + 1``.
    """
    mu = as_angles(mu)
    rule = _resolve_rule(profile, mu.size, rule)
    factors = profile(rule.nodes[:, None] + mu[None, :])
    return float(np.prod(factors, axis=1).sum() / rule.node_count)


def _offset_products(profile, mu, x, sign):
    # row i: prod_{j != i} g(x + sign * (mu_j - mu_i))
    n = mu.size
    diff = sign * (mu[None, :] - mu[:, None])
    vals = profile(x[:, None, None] + diff[None, :, :])
    vals[:, np.arange(n), np.arange(n)] = 1.0
    return np.prod(vals, axis=2)


def gradient(profile: DetectionProfile, mu, rule=None) -> np.ndarray:
    """Partial derivatives of :func:`no_detection_probability` w.r.t. each angle.

    Component ``i`` is the average of ``g'(x) prod_{j != i} g(x + mu_j - mu_i)``.
    """
    mu = as_angles(mu)
    rule = _resolve_rule(profile, mu.size, rule)
    x = rule.nodes
    weights = profile.derivative(x)[:, None] * _offset_products(profile, mu, x, 1.0)
    return weights.sum(axis=0) / rule.node_count


def gradient_symmetric(profile: DetectionProfile, mu, rule=None) -> np.ndarray:
    """Same derivatives via the antisymmetrised integrand.

    Kept as an independent cross-check of :func:`gradient`.
    """
    mu = as_angles(mu)
    rule = _resolve_rule(profile, mu.size, rule)
    x = rule.nodes
    plus = _offset_products(profile, mu, x, 1.0)
    minus = _offset_products(profile, mu, x, -1.0)
    integrand = 0.5 * profile.derivative(x)[:, None] * (plus - minus)
    return integrand.sum(axis=0) / rule.node_count
