"""Exit criteria for the package, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line (visible even under
pytest's output capture). Run standalone with ``python tests/test_acceptance.py``.
"""

import math
import time

import numpy as np
import pytest

from aspectsearch import (
    double_factorial,
    g_tilde,
    g_tilde_closed_form_sin2,
    gradient,
    grid_search,
    lambda_chain,
    make_sin2_profile,
    make_strategy,
    no_detection_probability,
    pair_index,
    sigma_coprime,
    sigma_reflect,
    strategy_angles,
    unpair,
    verify_identities,
    verify_lower_bound,
)
from aspectsearch.simulate import SimulationConfig, simulate

from conftest import random_profiles

SIN2 = make_sin2_profile()
PAIRS_8 = [(m, n) for n in range(1, 9) for m in range(1, n + 1)]
BOUND_PROFILES = random_profiles(20, seed=2010, max_harmonic=4)
STATIONARY_PROFILES = random_profiles(10, seed=2011, max_harmonic=4)


@pytest.fixture
def report(capsys):
    def _report(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        assert ok, f"{label}: {detail}"
    return _report


def test_c01_closed_form_table(report):
    start = time.perf_counter()
    worst = max(abs(g_tilde(make_strategy(m, n), SIN2) - g_tilde_closed_form_sin2(make_strategy(m, n)))
                for m, n in PAIRS_8)
    elapsed = time.perf_counter() - start
    spots = {(1, 2): 0.125, (2, 2): 0.375, (3, 3): 0.3125, (2, 4): 0.0234375}
    spot_err = max(abs(g_tilde(make_strategy(m, n), SIN2) - v) for (m, n), v in spots.items())
    ok = len(PAIRS_8) == 36 and worst <= 1e-12 and spot_err <= 1e-12 and elapsed < 1.0
    report("C1 closed-form table", ok, f"max |quad - exact| = {worst:.2e}, spot err = {spot_err:.2e}, {elapsed:.3f}s")


def test_c02_lower_bound(report):
    start = time.perf_counter()
    failures = [(m, n) for m, n in PAIRS_8 if not verify_lower_bound(make_strategy(m, n), SIN2).holds]
    checked = len(PAIRS_8)
    for k, profile in enumerate(BOUND_PROFILES):
        for n in range(1, 7):
            for m in range(1, 7):
                checked += 1
                if not verify_lower_bound(make_strategy(m, n), profile, tol=1e-12).holds:
                    failures.append((k, m, n))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 5.0
    report("C2 lower bound", ok, f"{checked} checks, failures={failures[:5]}, {elapsed:.3f}s")


def test_c03_chain_monotone(report):
    checked, failures = 0, []
    cases = [(SIN2, m, n) for m, n in PAIRS_8]
    cases += [(p, m, n) for p in BOUND_PROFILES for n in range(1, 7) for m in range(1, 7)]
    for profile, m, n in cases:
        spec = make_strategy(m, n)
        if spec.p < 2:
            continue
        chain = lambda_chain(spec, profile)
        checked += 1
        if any(b < a - 1e-12 for a, b in zip(chain, chain[1:])):
            failures.append((m, n, chain))
    report("C3 chain monotonicity", not failures and checked > 0, f"{checked} chains with p >= 2, failures={len(failures)}")


def test_c04_stationarity(report):
    rng = np.random.default_rng(2012)
    worst = 0.0
    for profile in [SIN2, *STATIONARY_PROFILES]:
        for m, n in PAIRS_8:
            spec = make_strategy(m, n)
            for mu0 in rng.uniform(0, np.pi, 10):
                worst = max(worst, float(np.max(np.abs(gradient(profile, strategy_angles(spec, mu0))))))
    report("C4 stationarity", worst <= 1e-10, f"max |grad| = {worst:.2e} over {11 * 36 * 10} strategies")


def test_c05_gradient_vs_finite_differences(report):
    rng = np.random.default_rng(2013)
    h = 1e-5
    worst = 0.0
    for profile in random_profiles(50, seed=2014, max_harmonic=4):
        mu = rng.uniform(0, np.pi, int(rng.integers(2, 6)))
        exact = gradient(profile, mu)
        fd = np.array([(no_detection_probability(profile, mu + h * e) - no_detection_probability(profile, mu - h * e)) / (2 * h)
                       for e in np.eye(mu.size)])
        worst = max(worst, float(np.max(np.abs(exact - fd) / np.abs(fd))))
    report("C5 gradient vs central differences", worst <= 1e-6, f"max componentwise relative error = {worst:.2e}")


def test_c06_identities(report):
    rng = np.random.default_rng(2015)
    xs = rng.uniform(-np.pi, np.pi, 100)
    worst = 0.0
    for profile in [SIN2, *random_profiles(5, seed=2016)]:
        for n in range(1, 9):
            for m in range(1, 2 * n + 1):
                worst = max(worst, verify_identities(make_strategy(m, n), profile, xs))
    report("C6 product identities", worst <= 1e-12, f"max residual = {worst:.2e}")


def test_c07_bijections(report):
    problems = []
    for n in range(1, 65):
        for i in range(n):
            domain = [j for j in range(n) if j != i]
            if sorted(sigma_reflect(i, j, n) for j in domain) != domain:
                problems.append(("reflect-perm", i, n))
            if any(sigma_reflect(i, sigma_reflect(i, j, n), n) != j for j in domain):
                problems.append(("reflect-inv", i, n))
    for r in range(1, 65):
        for q in range(1, r + 1):
            if math.gcd(q, r) == 1 and sorted(sigma_coprime(q, j, r) for j in range(r)) != list(range(r)):
                problems.append(("coprime", q, r))
    for a in range(1, 65):
        for b in range(1, 65):
            ws = [pair_index(u, v, a) for v in range(b) for u in range(a)]
            if sorted(ws) != list(range(a * b)) or any(pair_index(*unpair(w, a, b), a) != w for w in range(a * b)):
                problems.append(("pair", a, b))
    for p in range(1, 51):
        if double_factorial(2 * p - 1) < math.factorial(p):
            problems.append(("dfact", p))
    report("C7 bijections and (2p-1)!! >= p!", not problems, f"problems={problems[:5]}")


def test_c08_grid_search(report):
    start = time.perf_counter()
    two = grid_search(SIN2, 2, np.pi / 360)
    three = grid_search(SIN2, 3, np.pi / 60)
    elapsed = time.perf_counter() - start
    ok = (abs(two.angles.angles[1] - np.pi / 2) <= 1e-12 and abs(two.value - 0.125) <= 1e-12
          and np.allclose(three.angles.angles, [0, np.pi / 3, 2 * np.pi / 3], atol=1e-12, rtol=0)
          and abs(three.value - 0.03125) <= 1e-12 and elapsed < 30.0)
    report("C8 brute-force oracle", ok,
           f"n=2 -> {two.angles.angles}, {two.value}; n=3 -> {three.angles.angles}, {three.value}; {elapsed:.3f}s")


def test_c09_monte_carlo(report):
    angles = (0.0, np.pi / 2)
    single = simulate(SimulationConfig(10**6, 1, angles, SIN2))
    single_ok = abs(single.estimate - 0.125) <= 4 * single.std_error
    start = time.perf_counter()
    passed = 0
    for seed in range(100):
        r = simulate(SimulationConfig(10**6, seed, angles, SIN2))
        passed += abs(r.estimate - 0.125) <= 5 * r.std_error
    elapsed = time.perf_counter() - start
    ok = single_ok and passed >= 99 and elapsed < 10.0
    report("C9 Monte-Carlo consistency", ok,
           f"seed 1: {single.estimate} +/- {single.std_error:.2e}; {passed}/100 seeds within 5 sigma; {elapsed:.2f}s")


def test_c10_invariances(report):
    rng = np.random.default_rng(2017)
    worst = {"rotation": 0.0, "permutation": 0.0, "reflection": 0.0, "periodicity": 0.0}
    for profile in random_profiles(100, seed=2018, max_harmonic=4):
        n = int(rng.integers(1, 7))
        mu = rng.uniform(-np.pi, np.pi, n)
        base = no_detection_probability(profile, mu)
        shifted = mu.copy()
        shifted[rng.integers(n)] += np.pi
        for key, other in [("rotation", mu + rng.uniform(-2 * np.pi, 2 * np.pi)),
                           ("permutation", rng.permutation(mu)),
                           ("reflection", -mu),
                           ("periodicity", shifted)]:
            worst[key] = max(worst[key], abs(no_detection_probability(profile, other) - base))
    ok = max(worst.values()) <= 1e-13
    report("C10 invariance suite", ok, ", ".join(f"{k} {v:.1e}" for k, v in worst.items()))


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
