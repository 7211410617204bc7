import pytest

from affordances import sample_path
from affordances.storage import load_structure
from affordances.systems import AttributeTable


@pytest.fixture(scope="session")
def tv():
    return load_structure(sample_path("tv"))


@pytest.fixture(scope="session")
def actors_bundle():
    return load_structure(sample_path("actors"))


@pytest.fixture(scope="session")
def dunk():
    return load_structure(sample_path("dunk"))


@pytest.fixture(scope="session")
def playgrounds():
    return load_structure(sample_path("playgrounds"))


def make_table(name, rows, attributes=("p",)):
    """Small table helper: rows as {id: vector or single atom}."""
    fixed = {x: (row,) if isinstance(row, str) else tuple(row)
             for x, row in rows.items()}
    return AttributeTable(name, tuple(rows), tuple(attributes), fixed)
