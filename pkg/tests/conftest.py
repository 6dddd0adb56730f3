import time

import pytest

from gammagraphs import SearchBudget
from gammagraphs.classify import classify, enumerate_connected_graphs


@pytest.fixture(scope="session")
def classification_upto5():
    """Classification of all connected graphs on at most five vertices,
    with the elapsed wall time (shared so the run happens once)."""
    budget = SearchBudget(k_max=6)
    t0 = time.perf_counter()
    graphs = [g for n in range(1, 6) for g in enumerate_connected_graphs(n)]
    report = classify(graphs, budget)
    return report, time.perf_counter() - t0


@pytest.fixture(scope="session")
def classification_six():
    """Classification of the 112 connected six-vertex graphs, with timing."""
    budget = SearchBudget(k_max=6)
    t0 = time.perf_counter()
    report = classify(enumerate_connected_graphs(6), budget)
    return report, time.perf_counter() - t0
