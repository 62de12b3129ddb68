# File: TukeyDepthHub/tests/conftest.py
"""
pytest-django configuration for TukeyDepthHub.

All tests in the project automatically pick up this conftest, so no
per-test-file DJANGO_SETTINGS_MODULE override is needed.
"""

import django
import numpy as np
import pytest


# ---------------------------------------------------------------------------
# Tell pytest-django which settings module to use
# ---------------------------------------------------------------------------
def pytest_configure(config):
    """Called before pytest collects tests — configure Django settings."""
    import os
    os.environ.setdefault(
        'DJANGO_SETTINGS_MODULE',
        'depth_hub.settings.test',
    )
    django.setup()


# ---------------------------------------------------------------------------
# Shared fixtures
# ---------------------------------------------------------------------------

@pytest.fixture
def api_client():
    """DRF APIClient instance ready for use."""
    from rest_framework.test import APIClient
    return APIClient()


@pytest.fixture(autouse=True)
def clear_cache():
    """Every test starts with an empty locmem cache."""
    from django.core.cache import cache
    cache.clear()
    yield
    cache.clear()


@pytest.fixture
def simplex():
    """Regular simplex around the origin; depth of 0 is 1/4."""
    return np.array([
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ])


@pytest.fixture
def csv_file(tmp_path):
    """Factory writing a matrix to a CSV file under tmp_path."""
    from apps.depth.dataio import write_matrix

    def make(name, rows):
        path = tmp_path / name
        write_matrix(path, np.asarray(rows, dtype=float))
        return path

    return make
