import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hamforbid import petersen_graph

PETERSEN_G6 = "IheA@GUAo"


@pytest.fixture
def petersen():
    return petersen_graph()
