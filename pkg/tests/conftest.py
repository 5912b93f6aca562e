"""Shared fixtures and hypothesis settings."""

import os

import pytest
from hypothesis import HealthCheck, settings

from src.polyring import parse_poly
from src.storage.database import Database

settings.register_profile(
    "schurkit",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "schurkit"))


def pytest_collection_modifyitems(config, items):
    if os.getenv("SCHURKIT_STRETCH") == "1":
        return
    skip = pytest.mark.skip(reason="set SCHURKIT_STRETCH=1 to run")
    for item in items:
        if "stretch" in item.keywords:
            item.add_marker(skip)


# s^(1)_(2,1)(x1, x2, x3), in canonical order
FIVE_TERM = "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3"


@pytest.fixture
def five_term():
    return parse_poly(FIVE_TERM)


@pytest.fixture
def db_path(tmp_path):
    return str(tmp_path / "runs.db")


@pytest.fixture
def database(db_path):
    return Database(db_path)
