"""Evenly spaced ``(m, n)`` search strategies.

An ``(m, n)`` strategy takes ``n`` looks with constant separation
``m pi / n``. With ``p = gcd(m, n)``, ``m = p q`` and ``n = p r`` the looks
visit only ``r`` distinct angles modulo ``pi``, each ``p`` times; that
decomposition drives every result in this module.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NonPositive, ValidationError
from .ntheory import double_factorial, factorial, floor_mod
from .profile import DetectionProfile
from .quadrature import AngleVector, _resolve_rule, no_detection_probability

__all__ = [
    "BOUND_TOL",
    "StrategySpec",
    "LowerBoundReport",
    "make_strategy",
    "strategy_angles",
    "h_eval",
    "lambda_eval",
    "g_tilde",
    "g_tilde_closed_form_sin2",
    "g_tilde_closed_form_sin2_exact",
    "identity_residuals",
    "verify_identities",
    "lambda_chain",
    "verify_lower_bound",
    "parse_strategy_descriptor",
]

BOUND_TOL = 1e-12


@dataclass(frozen=True)
class StrategySpec:
    m: int
    n: int

    def __post_init__(self):
        for name in ("m", "n"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise ValidationError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise NonPositive(f"{name} must be >= 1, got {value}")
            object.__setattr__(self, name, int(value))

    @property
    def p(self) -> int:
        return math.gcd(self.m, self.n)

    @property
    def q(self) -> int:
        return self.m // self.p

    @property
    def r(self) -> int:
        return self.n // self.p

    @property
    def mu_step(self) -> float:
        """Separation between consecutive looks, ``m pi / n`` radians."""
        return self.m * np.pi / self.n

    def offsets(self) -> np.ndarray:
        """Look angles ``i m pi / n`` reduced exactly modulo pi via integers."""
        return np.array([floor_mod(self.m * i, self.n) for i in range(self.n)]) * (np.pi / self.n)


@dataclass(frozen=True)
class LowerBoundReport:
    g_tilde_mn: float
    g_tilde_1n: float
    holds: bool


def make_strategy(m: int, n: int) -> StrategySpec:
    return StrategySpec(m, n)


def strategy_angles(spec: StrategySpec, mu0: float = 0.0) -> AngleVector:
    """Look angles ``mu0 + i m pi / n`` for ``i = 0..n-1``, normalised to ``[0, pi)``."""
    return AngleVector(tuple(mu0 + spec.offsets())).normalized()


def h_eval(spec: StrategySpec, profile: DetectionProfile, x):
    """Product of ``g`` over the ``r`` distinct look angles: ``prod_j g(x + j m pi / n)``."""
    x = np.asarray(x, dtype=float)
    out = np.ones(x.shape)
    for j in range(spec.r):
        out = out * profile(x + j * spec.mu_step)
    return out[()]


def lambda_eval(spec: StrategySpec, profile: DetectionProfile, level: int, x):
    """``lambda_l(x) = prod_{k=1}^{p-l} h(x + (k-1) pi / n)``."""
    if not 0 <= level < spec.p:
        raise ValidationError(f"level must lie in [0, {spec.p}), got {level}")
    x = np.asarray(x, dtype=float)
    out = np.ones(x.shape)
    for k in range(spec.p - level):
        out = out * h_eval(spec, profile, x + k * np.pi / spec.n)
    return out[()]


def g_tilde(spec: StrategySpec, profile: DetectionProfile, rule=None) -> float:
    """No-detection probability of the ``(m, n)`` strategy (reference angle 0)."""
    return no_detection_probability(profile, spec.offsets(), rule)


def g_tilde_closed_form_sin2_exact(spec: StrategySpec) -> Fraction:
    """``2^p (2p-1)!! / (4^n p!)`` as an exact fraction, valid for ``g = sin^2``."""
    p = spec.p
    return Fraction(2**p * double_factorial(2 * p - 1), 4**spec.n * factorial(p))


def g_tilde_closed_form_sin2(spec: StrategySpec) -> float:
    return float(g_tilde_closed_form_sin2_exact(spec))


def identity_residuals(spec: StrategySpec, profile: DetectionProfile, xs) -> dict:
    """Pointwise residuals of the three product identities at angles ``xs``.

    ``shifted_h``: ``prod_k h(x + (k-1) pi/n)`` vs ``prod_i g(x + i pi/n)``.
    ``h_power``: ``prod_i g(x + m i pi/n)`` vs ``h(x)**p``.
    ``reindex``: ``prod_j g(x + m j pi/n)`` vs ``prod_j g(x + j pi/r)``, ``j < r``.
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    m, n, p, r = spec.m, spec.n, spec.p, spec.r
    step = np.pi / n

    def prod_g(angles):
        return np.prod(profile(xs[:, None] + np.asarray(angles)[None, :]), axis=1)

    lhs_shifted = np.ones_like(xs)
    for k in range(p):
        lhs_shifted = lhs_shifted * h_eval(spec, profile, xs + k * step)
    rhs_shifted = prod_g(np.arange(n) * step)

    lhs_power = prod_g(m * np.arange(n) * step)
    rhs_power = h_eval(spec, profile, xs) ** p

    lhs_reindex = prod_g(m * np.arange(r) * step)
    rhs_reindex = prod_g(np.arange(r) * (np.pi / r))

    return {
        "shifted_h": np.abs(lhs_shifted - rhs_shifted),
        "h_power": np.abs(lhs_power - rhs_power),
        "reindex": np.abs(lhs_reindex - rhs_reindex),
    }


def verify_identities(spec: StrategySpec, profile: DetectionProfile, xs) -> float:
    """Largest residual across :func:`identity_residuals`."""
    res = identity_residuals(spec, profile, xs)
    return float(max(v.max() for v in res.values()))


def lambda_chain(spec: StrategySpec, profile: DetectionProfile, rule=None) -> list[float]:
    """Averages of ``lambda_l(x) h(x)**l`` for ``l = 0..p-1``.

    The first entry equals the ``(1, n)`` value and the last the ``(m, n)``
    value; the sequence is expected to be nondecreasing.
    """
    rule = _resolve_rule(profile, spec.n, rule)
    x = rule.nodes
    h = h_eval(spec, profile, x)
    chain = []
    for level in range(spec.p):
        integrand = lambda_eval(spec, profile, level, x) * h**level
        chain.append(float(integrand.sum() / rule.node_count))
    return chain


def verify_lower_bound(spec: StrategySpec, profile: DetectionProfile, rule=None,
                       tol: float = BOUND_TOL) -> LowerBoundReport:
    """Check that the ``(m, n)`` strategy is no better than ``(1, n)``."""
    mn = g_tilde(spec, profile, rule)
    one_n = g_tilde(StrategySpec(1, spec.n), profile, rule)
    return LowerBoundReport(mn, one_n, bool(mn >= one_n - tol))


def parse_strategy_descriptor(desc):
    """``{"m": .., "n": ..}`` -> :class:`StrategySpec`; ``{"angles": [...]}`` -> :class:`AngleVector`."""
    if isinstance(desc, str):
        try:
            desc = json.loads(desc)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid strategy JSON: {exc}") from exc
    if not isinstance(desc, dict):
        raise ValidationError(f"strategy descriptor must be an object: {desc!r}")
    has_mn = "m" in desc or "n" in desc
    has_angles = "angles" in desc
    if has_mn == has_angles:
        raise ValidationError("strategy descriptor needs exactly one of {m, n} or angles")
    if has_angles:
        if not isinstance(desc["angles"], list):
            raise ValidationError("'angles' must be an array of radians")
        return AngleVector(tuple(desc["angles"]))
    try:
        return StrategySpec(desc["m"], desc["n"])
    except KeyError as exc:
        raise ValidationError(f"strategy descriptor missing {exc}") from exc
