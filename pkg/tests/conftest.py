import sys
from pathlib import Path

import pytest

from gdep import read_team

DATA = Path(__file__).parent / "data"
sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def fig2():
    return read_team(DATA / "fig2.csv")


@pytest.fixture
def salary():
    return read_team(DATA / "salary.csv")
