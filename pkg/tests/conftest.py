import pytest

from homflytop.gen import corpus

CORPUS_SEED = 20240809
CORPUS_SIZE = 220
CORPUS_MAX_EDGES = 8


@pytest.fixture(scope="session")
def graph_corpus():
    """Deterministic corpus of small connected plane bipartite graphs."""
    return corpus(seed=CORPUS_SEED, count=CORPUS_SIZE, max_edges=CORPUS_MAX_EDGES)
