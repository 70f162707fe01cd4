"""
    Shared fixtures for the ``lattice_crystals`` test suite.

    Read more about conftest.py under:
    - https://docs.pytest.org/en/stable/fixture.html
    - https://docs.pytest.org/en/stable/writing_plugins.html
"""
import pytest

from lattice_crystals import limits


@pytest.fixture(autouse=True)
def default_limits(monkeypatch):
    """Every test starts from the built-in limits, whatever the environment says"""
    monkeypatch.delenv(limits.CAP_ENV_VAR, raising=False)
    monkeypatch.delenv(limits.CONFIG_ENV_VAR, raising=False)
    monkeypatch.setattr(limits, "_active", limits.Limits())
    yield limits.active()


@pytest.fixture
def small_cap():
    with limits.override(cap=50) as active:
        yield active
