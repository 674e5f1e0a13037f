import random

import pytest
from hypothesis import settings

settings.register_profile("det", derandomize=True, max_examples=100, deadline=None)
settings.load_profile("det")


@pytest.fixture
def rng():
    return random.Random(0)
