import pytest

from corpusutil import all_graphs


@pytest.fixture(scope="session")
def corpus_upto5():
    """Every labelled graph on 3, 4 and 5 vertices (8 + 64 + 1024)."""
    return [g for n in (3, 4, 5) for g in all_graphs(n)]
