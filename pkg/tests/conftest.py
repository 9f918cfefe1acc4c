import os
import random

import pytest


@pytest.fixture
def rng():
    """Seeded RNG for sampled checks; HESSE_MOORE_SEED overrides."""
    seed = int(os.environ.get("HESSE_MOORE_SEED", "20260823"))
    return random.Random(seed)
