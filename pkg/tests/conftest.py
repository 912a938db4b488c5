import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "octonode",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
    derandomize=True,
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "octonode"))

SAMPLES = Path(__file__).resolve().parents[1] / "src" / "octonode" / "data" / "samples"


@pytest.fixture
def samples() -> Path:
    return SAMPLES
