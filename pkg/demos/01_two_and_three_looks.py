# How much does a second (or third) look help, and where should it go?
#
# A sin^2 profile misses the target surely when looking at its short side
# (x = pi/2) and never when looking broadside (x = 0).

import numpy as np

from aspectsearch import make_sin2_profile, no_detection_probability, gradient

g = make_sin2_profile()

# one look: orientation unknown, so the miss probability is just the mean of g
print("one look:", no_detection_probability(g, [0.0]))

# two looks: scan the separation
for deg in (0, 30, 45, 60, 90, 120, 180):
    mu = [0.0, np.radians(deg)]
    print(f"two looks {deg:3d} deg apart: P(miss) = {no_detection_probability(g, mu):.6f}")

# 90 degrees is a stationary point and gives 1/8
print("gradient at 90 deg:", gradient(g, [0.0, np.pi / 2]))

# three looks 60 degrees apart
mu3 = np.radians([0, 60, 120])
print("three looks 60 deg apart:", no_detection_probability(g, mu3), "(2/4**3 =", 2 / 4**3, ")")
print("three looks all at 0 deg:", no_detection_probability(g, [0, 0, 0]))
