import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aspectsearch.errors import EmptyCoefficients, RangeViolation
from aspectsearch.profile import (
    constant_profile,
    eval_g,
    eval_g_prime,
    load_profile,
    make_cosine_profile,
    make_sin2_profile,
    profile_from_descriptor,
    profile_to_descriptor,
    random_cosine_profile,
)

angles = st.floats(min_value=-20.0, max_value=20.0, allow_nan=False)


def test_sin2_coefficients_and_values(sin2):
    assert sin2.coeffs == (0.5, -0.5)
    assert eval_g(sin2, 0.0) == 0.0
    assert eval_g(sin2, np.pi / 2) == 1.0
    assert eval_g(sin2, np.pi / 4) == pytest.approx(0.5, abs=1e-15)


def test_sin2_direct_trig(sin2):
    # direct evaluation of sin(0.3)**2
    assert eval_g(sin2, 0.3) == pytest.approx(0.08733219254516084, abs=1e-15)
    assert math.sin(0.3) ** 2 == pytest.approx(0.08733219254516084, abs=1e-16)


def test_sin2_derivative(sin2):
    assert eval_g_prime(sin2, 0.0) == 0.0
    assert eval_g_prime(sin2, np.pi / 4) == pytest.approx(1.0, abs=1e-15)


def test_cosine_profile_acceptance_and_rejection():
    assert make_cosine_profile([0.5, -0.5]) == make_sin2_profile()
    const = make_cosine_profile([1.0])
    assert eval_g(const, 0.37) == 1.0
    with pytest.raises(RangeViolation):
        make_cosine_profile([0.5, -0.6])
    with pytest.raises(RangeViolation):
        make_cosine_profile([0.9, 0.0, 0.2])
    with pytest.raises(EmptyCoefficients):
        make_cosine_profile([])


def test_range_tolerance_boundary():
    make_cosine_profile([0.5, -0.5 - 5e-10])
    with pytest.raises(RangeViolation):
        make_cosine_profile([0.5, -0.5 - 5e-9])


def test_array_evaluation_shape(sin2):
    x = np.linspace(-1, 1, 12).reshape(3, 4)
    assert eval_g(sin2, x).shape == (3, 4)
    assert eval_g(constant_profile(0.3), x).shape == (3, 4)
    np.testing.assert_allclose(eval_g(sin2, x), np.sin(x) ** 2, atol=1e-15)


@settings(max_examples=200)
@given(angles, st.integers(min_value=0, max_value=2**31))
def test_symmetries(x, seed):
    profile = random_cosine_profile(np.random.default_rng(seed), 1 + seed % 4)
    assert eval_g(profile, x) == eval_g(profile, -x)
    assert eval_g(profile, x) == pytest.approx(eval_g(profile, x + np.pi), abs=1e-14)
    assert eval_g_prime(profile, x) == pytest.approx(-eval_g_prime(profile, -x), abs=1e-14)


@settings(max_examples=100)
@given(st.floats(min_value=-3.0, max_value=3.0), st.integers(min_value=0, max_value=2**31))
def test_derivative_matches_finite_difference(x, seed):
    profile = random_cosine_profile(np.random.default_rng(seed), 1 + seed % 4)
    h = 1e-6
    fd = (eval_g(profile, x + h) - eval_g(profile, x - h)) / (2 * h)
    exact = eval_g_prime(profile, x)
    assert abs(exact - fd) <= 1e-8 * max(1.0, abs(exact))


def test_random_profiles_stay_in_unit_interval(rng):
    x = np.linspace(0, np.pi, 20001)
    for _ in range(50):
        values = eval_g(random_cosine_profile(rng, int(rng.integers(0, 6))), x)
        assert values.min() >= 0.0 and values.max() <= 1.0


@pytest.mark.parametrize("r", range(1, 9))
def test_sine_product_identity(r, rng):
    x = rng.uniform(-3, 3, 50)
    prod = 2.0 ** (r - 1) * np.prod([np.sin(x + j * np.pi / r) for j in range(r)], axis=0)
    np.testing.assert_allclose(prod, np.sin(r * x), atol=1e-12)


def test_descriptors(tmp_path):
    assert profile_from_descriptor({"type": "sin2"}) == make_sin2_profile()
    desc = {"type": "cosine", "coeffs": [0.6, 0.1, -0.2]}
    profile = profile_from_descriptor(desc)
    assert profile_to_descriptor(profile) == desc
    assert profile_to_descriptor(make_sin2_profile()) == {"type": "sin2"}
    path = tmp_path / "p.json"
    path.write_text('{"type": "cosine", "coeffs": [0.6, 0.1, -0.2]}')
    assert load_profile(str(path)) == profile
    assert load_profile("sin2") == make_sin2_profile()
    with pytest.raises(ValueError):
        profile_from_descriptor({"type": "tabulated"})
