import pytest

from g2kl import cell
from g2kl.kl import KLEngine


@pytest.fixture(scope="session")
def engine():
    return KLEngine()


@pytest.fixture(scope="session")
def lcell(engine):
    return cell.LowestCell(engine)


@pytest.fixture(scope="session")
def delta_table(lcell):
    return lcell.delta_table()
