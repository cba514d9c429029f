# Direct simulation of independent looks against a randomly oriented target,
# compared with the quadrature value.

import numpy as np

from aspectsearch import make_sin2_profile, no_detection_probability, random_cosine_profile
from aspectsearch.simulate import SimulationConfig, simulate

g = make_sin2_profile()
angles = (0.0, np.pi / 2)
exact = no_detection_probability(g, angles)
for seed in range(5):
    r = simulate(SimulationConfig(10**6, seed, angles, g))
    print(f"seed {seed}: {r.estimate:.6f} +/- {r.std_error:.6f}  (exact {exact}, z = {(r.estimate - exact) / r.std_error:+.2f})")

# four shards give the same answer sequentially or on a thread pool
config = SimulationConfig(400_000, 99, angles, g, shards=4)
print(simulate(config) == simulate(config, workers=4))

p = random_cosine_profile(np.random.default_rng(3), 4)
mu = (0.1, 0.9, 2.2)
r = simulate(SimulationConfig(10**6, 1, mu, p))
print("random profile:", r.estimate, "+/-", r.std_error, "quadrature:", no_detection_probability(p, mu))
