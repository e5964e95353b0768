import pytest
from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def brute_1e4():
    import oracles

    return oracles.brute_force_triples(10**4)


@pytest.fixture(scope="session")
def table_60():
    from markovnorm import markov_table

    return markov_table(60)
