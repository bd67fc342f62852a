import random
from pathlib import Path

import pytest

from orbiklt import DualGraph, adjunction_degrees, is_negative_definite

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def random_contractible_graphs(count: int, seed: int, max_vertices: int = 7,
                               require_d_nonnegative: bool = True):
    """Seeded stream of negative definite connected graphs.

    Random trees (occasionally with an extra edge) with weights in
    [1, 6] and a sprinkling of branches; samples failing negative
    definiteness, or the d >= 0 requirement when asked for, are
    discarded and regenerated.
    """
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(1, max_vertices)
        edges = [(rng.randrange(i), i) for i in range(1, n)]
        if n >= 2 and rng.random() < 0.15:
            extra = rng.sample(range(n), 2)
            edges.append((min(extra), max(extra)))
        vertices = [rng.randint(1, 6) for _ in range(n)]
        branches = []
        for v in range(n):
            if rng.random() < 0.35:
                inter = 1 if rng.random() < 0.8 else 2
                branches.append((v, rng.randint(2, 6), inter))
        g = DualGraph.make(vertices, edges, branches)
        if not is_negative_definite(g):
            continue
        if require_d_nonnegative and any(x < 0 for x in adjunction_degrees(g)):
            continue
        yield g
        produced += 1
