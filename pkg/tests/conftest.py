import pytest

from eccspec import census


@pytest.fixture(scope="session")
def census_records():
    """Session-wide cache of classified census levels, keyed by order."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = census.classify(n)
        return cache[n]

    return get
