"""Monte-Carlo check of the orientation-averaged no-detection probability.

Each trial draws a target orientation uniformly on ``[-pi/2, pi/2)`` and
makes every look independently: look ``i`` misses with probability
``g(x + mu_i)``. The trial is a miss iff every look misses.

Random numbers come from numpy's PCG64. Shard ``s`` of a run seeded with
``seed`` uses ``SeedSequence(seed, spawn_key=(s,))``; a run is therefore
reproducible for a fixed ``(seed, trials, shards)`` on any platform.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import NonPositive, ValidationError
from .profile import DetectionProfile
from .quadrature import AngleVector

__all__ = ["SimulationConfig", "SimulationResult", "simulate", "shard_generator"]

CHUNK = 1 << 14


@dataclass(frozen=True)
class SimulationConfig:
    trials: int
    seed: int
    angles: AngleVector
    profile: DetectionProfile
    shards: int = 1

    def __post_init__(self):
        for name in ("trials", "shards"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise ValidationError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise NonPositive(f"{name} must be >= 1, got {value}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, (int, np.integer)) \
                or not 0 <= self.seed < 2**64:
            raise ValidationError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if not isinstance(self.angles, AngleVector):
            object.__setattr__(self, "angles", AngleVector(tuple(np.atleast_1d(self.angles))))


@dataclass(frozen=True)
class SimulationResult:
    estimate: float
    std_error: float
    trials: int
    seed: int

    def to_dict(self) -> dict:
        return {"estimate": self.estimate, "std_error": self.std_error,
                "trials": self.trials, "seed": self.seed}


def shard_generator(seed: int, shard: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(shard,))))


def _harmonic_weights(profile, mu):
    # g(x + mu_i) = a_0 + sum_k a_k [cos(2kx) cos(2k mu_i) - sin(2kx) sin(2k mu_i)]
    a = np.array(profile.coeffs[1:])
    k = np.arange(1, a.size + 1)
    phase = 2.0 * np.multiply.outer(mu, k)  # (n, K)
    return a * np.cos(phase), -a * np.sin(phase)


def _orientation_harmonics(x, K):
    # cos(2kx), sin(2kx) for k = 1..K with one trig call per draw;
    # sin(2x) carries the sign of x on [-pi/2, pi/2)
    c1 = np.cos(2.0 * x)
    s1 = np.copysign(np.sqrt(np.maximum((1.0 - c1) * (1.0 + c1), 0.0)), x)
    cos_k, sin_k = [c1], [s1]
    for _ in range(K - 1):
        c, s = cos_k[-1], sin_k[-1]
        cos_k.append(c * c1 - s * s1)
        sin_k.append(s * c1 + c * s1)
    return cos_k, sin_k


def _count_misses(profile, mu, trials, rng):
    K = profile.max_harmonic
    a0 = profile.coeffs[0]
    if K:
        cos_w, sin_w = _harmonic_weights(profile, mu)
    misses = 0
    remaining = trials
    while remaining:
        size = min(remaining, CHUNK)
        x = rng.random(size) * np.pi - np.pi / 2
        u = rng.random((mu.size, size))
        if K:
            cos_k, sin_k = _orientation_harmonics(x, K)
        missed = np.ones(size, dtype=bool)
        for i in range(mu.size):
            miss_prob = a0
            for k in range(K):
                miss_prob = miss_prob + cos_w[i, k] * cos_k[k] + sin_w[i, k] * sin_k[k]
            missed &= u[i] < miss_prob
        misses += int(np.count_nonzero(missed))
        remaining -= size
    return misses


def simulate(config: SimulationConfig, workers: int = 1) -> SimulationResult:
    """Estimate the no-detection probability by direct simulation.

    ``workers > 1`` runs shards on a thread pool; the counts are summed, so
    the result matches a sequential run with the same shard count.
    """
    mu = np.array(config.angles.angles)
    base, extra = divmod(config.trials, config.shards)
    sizes = [base + (s < extra) for s in range(config.shards)]

    def run(shard):
        if not sizes[shard]:
            return 0
        return _count_misses(config.profile, mu, sizes[shard], shard_generator(config.seed, shard))

    if workers > 1 and config.shards > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            misses = sum(pool.map(run, range(config.shards)))
    else:
        misses = sum(run(s) for s in range(config.shards))

    estimate = misses / config.trials
    std_error = math.sqrt(estimate * (1.0 - estimate) / config.trials)
    return SimulationResult(estimate, std_error, config.trials, int(config.seed))
