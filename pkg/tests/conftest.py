import pytest

from shardorder.lattice import build_lattice
from shardorder.shelling import edge_label


@pytest.fixture(scope="session")
def lattice():
    """Factory for full lattices, built once per size and shared."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_lattice(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def edge_labels(lattice):
    """Factory for {(i, j): label} over all cover edges of a lattice."""
    cache = {}

    def get(n):
        if n not in cache:
            lat = lattice(n)
            cache[n] = {
                (i, j): edge_label(lat.elements[i], lat.elements[j])
                for i in range(len(lat))
                for j in lat.covers[i]
            }
        return cache[n]

    return get
