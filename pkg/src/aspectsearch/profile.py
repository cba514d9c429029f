"""Single-observation no-detection profiles.

A profile is the function ``g(x) = a_0 + sum_k a_k cos(2 k x)`` giving the
probability that one look at relative angle ``x`` (radians) misses the
target. Restricting ``g`` to a cosine series in ``2x`` makes it even and
pi-periodic by construction, and turns every integral downstream into a
trigonometric polynomial that uniform quadrature integrates exactly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyCoefficients, RangeViolation, ValidationError

__all__ = [
    "RANGE_TOL",
    "DetectionProfile",
    "make_sin2_profile",
    "make_cosine_profile",
    "constant_profile",
    "random_cosine_profile",
    "eval_g",
    "eval_g_prime",
    "profile_from_descriptor",
    "profile_to_descriptor",
    "load_profile",
]

RANGE_TOL = 1e-9
_GRID_FACTOR = 4 * 32


def _validation_grid(max_harmonic):
    count = _GRID_FACTOR * (max_harmonic + 1)
    return np.arange(count) * (np.pi / count)


@dataclass(frozen=True)
class DetectionProfile:
    """Even, pi-periodic no-detection probability stored as cosine coefficients.

    Build instances through :func:`make_cosine_profile` or
    :func:`make_sin2_profile`; direct construction runs the same range
    check.
    """

    coeffs: tuple[float, ...]
    name: str | None = field(default=None, compare=False)
    _harmonics: np.ndarray = field(init=False, repr=False, compare=False)
    _tail: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if not coeffs:
            raise EmptyCoefficients("a profile needs at least the constant coefficient")
        if not all(math.isfinite(c) for c in coeffs):
            raise ValidationError(f"non-finite coefficient in {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_harmonics", 2.0 * np.arange(1, len(coeffs)))
        object.__setattr__(self, "_tail", np.array(coeffs[1:]))

        values = self(_validation_grid(self.max_harmonic))
        lo, hi = float(values.min()), float(values.max())
        if lo < -RANGE_TOL or hi > 1.0 + RANGE_TOL:
            raise RangeViolation(
                f"profile {coeffs} spans [{lo:.6g}, {hi:.6g}], outside [0, 1]"
            )

    @property
    def max_harmonic(self) -> int:
        """Largest ``k`` with a ``cos(2 k x)`` term (trailing zeros included)."""
        return len(self.coeffs) - 1

    @property
    def mean(self) -> float:
        """Orientation average of ``g``, i.e. ``a_0``."""
        return self.coeffs[0]

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if not self._tail.size:
            return np.full(x.shape, self.coeffs[0])[()]
        phase = np.multiply.outer(x, self._harmonics)
        return (self.coeffs[0] + np.cos(phase) @ self._tail)[()]

    def derivative(self, x):
        x = np.asarray(x, dtype=float)
        if not self._tail.size:
            return np.zeros(x.shape)[()]
        phase = np.multiply.outer(x, self._harmonics)
        return (-(np.sin(phase) @ (self._harmonics * self._tail)))[()]


def make_sin2_profile() -> DetectionProfile:
    """``g(x) = sin(x)**2 = 1/2 - cos(2x)/2``."""
    return DetectionProfile((0.5, -0.5), name="sin2")


def make_cosine_profile(coeffs, name=None) -> DetectionProfile:
    return DetectionProfile(tuple(coeffs), name=name)


def constant_profile(value=1.0) -> DetectionProfile:
    return DetectionProfile((value,), name=f"const{value:g}")


def random_cosine_profile(rng, max_harmonic=3, margin=0.02) -> DetectionProfile:
    """Draw a valid profile with ``max_harmonic`` harmonics.

    Harmonic amplitudes decay like ``1/k``. The shape is affinely mapped so
    that its grid range is a random sub-interval of ``[margin, 1 - margin]``;
    the margin absorbs any excursion between grid points.
    """
    if max_harmonic < 0:
        raise ValidationError("max_harmonic must be >= 0")
    if max_harmonic == 0:
        return DetectionProfile((float(rng.uniform(margin, 1 - margin)),), name="random")
    k = np.arange(1, max_harmonic + 1)
    shape = rng.normal(size=max_harmonic) / k
    grid = _validation_grid(max_harmonic)
    values = np.cos(np.multiply.outer(grid, 2.0 * k)) @ shape
    lo, hi = values.min(), values.max()
    span = 1.0 - 2.0 * margin
    top, bottom = np.sort(rng.uniform(0.0, 1.0, size=2))[::-1]
    # keep the spread from collapsing so the profile is not near-constant
    bottom = min(bottom, top - 0.25)
    target_lo = margin + span * max(bottom, 0.0)
    target_hi = margin + span * top
    scale = (target_hi - target_lo) / (hi - lo)
    a0 = target_lo - scale * lo
    return DetectionProfile((float(a0), *(float(c) for c in scale * shape)), name="random")


def eval_g(profile: DetectionProfile, x):
    """Evaluate the no-detection probability at angle(s) ``x``. No clamping."""
    return profile(x)


def eval_g_prime(profile: DetectionProfile, x):
    """``g'(x) = -sum_k 2k a_k sin(2 k x)``."""
    return profile.derivative(x)


def profile_from_descriptor(desc) -> DetectionProfile:
    """Build a profile from ``{"type": "sin2"}`` or ``{"type": "cosine", "coeffs": [...]}``."""
    if not isinstance(desc, dict) or "type" not in desc:
        raise ValidationError(f"profile descriptor must be an object with a 'type': {desc!r}")
    kind = desc["type"]
    if kind == "sin2":
        return make_sin2_profile()
    if kind == "cosine":
        coeffs = desc.get("coeffs")
        if not isinstance(coeffs, (list, tuple)):
            raise ValidationError("cosine profile needs a 'coeffs' array")
        return make_cosine_profile(coeffs, name=desc.get("name"))
    raise ValidationError(f"unknown profile type {kind!r}")


def profile_to_descriptor(profile: DetectionProfile) -> dict:
    if profile.coeffs == (0.5, -0.5):
        return {"type": "sin2"}
    desc = {"type": "cosine", "coeffs": list(profile.coeffs)}
    if profile.name:
        desc["name"] = profile.name
    return desc


def load_profile(text: str) -> DetectionProfile:
    """Parse ``sin2``, an inline JSON descriptor, or a path to a JSON file."""
    text = text.strip()
    if text == "sin2":
        return make_sin2_profile()
    if not text.startswith("{"):
        try:
            with open(text) as fh:
                text = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read profile {text!r}: {exc}") from exc
    try:
        desc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid profile JSON: {exc}") from exc
    return profile_from_descriptor(desc)
