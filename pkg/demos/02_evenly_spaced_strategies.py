# Evenly spaced (m, n) strategies: step m*pi/n between consecutive looks.
#
# Their value depends only on p = gcd(m, n); for sin^2 it has the exact form
# 2^p (2p-1)!! / (4^n p!). The (1, n) strategy is the best of the family.

from aspectsearch import (
    g_tilde,
    g_tilde_closed_form_sin2_exact,
    lambda_chain,
    make_sin2_profile,
    make_strategy,
    verify_lower_bound,
)

g = make_sin2_profile()

print(" m  n  p   exact        quadrature")
for n in range(1, 7):
    for m in range(1, n + 1):
        spec = make_strategy(m, n)
        exact = g_tilde_closed_form_sin2_exact(spec)
        print(f"{m:2d} {n:2d} {spec.p:2d}   {str(exact):11s}  {g_tilde(spec, g):.12f}")

# the chain of integrals that climbs from the (1, n) value to the (m, n) value
for m, n in [(2, 4), (3, 6), (4, 8), (6, 6)]:
    spec = make_strategy(m, n)
    chain = lambda_chain(spec, g)
    print(f"({m},{n}) chain:", ["%.6f" % c for c in chain], verify_lower_bound(spec, g))
