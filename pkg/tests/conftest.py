import pytest

from didom.core import build_digraph


@pytest.fixture
def directed_triangle():
    # strongly connected orientation of K3: a -> b -> c -> a
    return build_digraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def chorded_5cycle():
    # oriented 5-cycle u v x y z plus the chord z -> x
    return build_digraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 2)])


@pytest.fixture
def bidirected_p4():
    return build_digraph(4, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2)])
