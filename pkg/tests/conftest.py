import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture
def tmp_cache(tmp_path, monkeypatch):
    """Point the degree cache at a per-test file and return its path."""
    path = tmp_path / "degree-cache.jsonl"
    monkeypatch.setenv("LPB_CACHE", str(path))
    return path
