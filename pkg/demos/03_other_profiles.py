# Beyond sin^2: random profiles, local descent and exhaustive lattice search.
#
# Every evenly spaced strategy is a stationary point whatever the profile,
# but for profiles with higher harmonics it need not be the global minimum.

import numpy as np

from aspectsearch import (
    g_tilde,
    grid_search,
    local_minimize,
    make_cosine_profile,
    make_strategy,
    random_cosine_profile,
    stationarity_check,
    strategy_angles,
)

rng = np.random.default_rng(7)
g = random_cosine_profile(rng, max_harmonic=3)
print("random profile coefficients:", np.round(g.coeffs, 4))

for m in (1, 2, 3):
    spec = make_strategy(m, 3)
    check = stationarity_check(g, strategy_angles(spec, 0.4))
    print(f"(m={m}, n=3): value {g_tilde(spec, g):.6f}, |grad| {check.gradient_norm:.1e}")

for seed in range(3):
    res = local_minimize(g, 3, init="random", seed=seed)
    print("descent from seed", seed, "->", np.degrees(res.angles.angles).round(3), res.value, res.converged)

print("lattice search:", grid_search(g, 3, np.pi / 90))

# a profile whose strongest term is cos(4x): looking 45 degrees apart wins
h = make_cosine_profile([0.5, 0.0, 0.4])
print("(1,2) value:", g_tilde(make_strategy(1, 2), h))
best = grid_search(h, 2, np.pi / 360)
print("best separation:", np.degrees(best.angles.angles[1]), "deg, value", best.value)
