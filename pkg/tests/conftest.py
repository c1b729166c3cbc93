import pytest

from ltcg import codes
from ltcg.corpus import standard_corpus


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def tables(corpus):
    return {entry.name: codes.coset_table(entry.code) for entry in corpus}
