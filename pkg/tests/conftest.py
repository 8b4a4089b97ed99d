import pytest

from adehall.pipeline import RunConfig, run


@pytest.fixture(scope="session")
def pipeline_runs():
    """Session-wide cache of pipeline reports keyed by configuration."""
    cache = {}

    def get(family, n=0, modulus=None, stages=None, seed=0):
        key = (family, n, modulus, stages, seed)
        if key not in cache:
            config = RunConfig(family=family, n=n, modulus=modulus, seed=seed)
            cache[key] = run(config, stages)
        return cache[key]

    return get
