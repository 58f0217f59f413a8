import pytest

from chowcalc import checks


@pytest.fixture(scope="session")
def run_named_check():
    """Run registry checks at the default seed, once per session."""
    cache = {}

    def run(name: str):
        if name not in cache:
            cache[name] = checks.run_check(checks.get_check(name))
        return cache[name]

    return run
