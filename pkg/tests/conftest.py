import numpy as np
import pytest

from aspectsearch import make_sin2_profile, random_cosine_profile


@pytest.fixture
def sin2():
    return make_sin2_profile()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_profiles(count, seed, max_harmonic=4):
    rng = np.random.default_rng(seed)
    return [random_cosine_profile(rng, int(rng.integers(1, max_harmonic + 1))) for _ in range(count)]


@pytest.fixture(scope="session")
def profiles():
    return random_profiles(10, seed=777)
