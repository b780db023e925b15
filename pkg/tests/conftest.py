import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bbmatch.core_geometry import fixture_hex6, fixture_oct8, fixture_rrbb4, fixture_sq4


@pytest.fixture
def sq4():
    return fixture_sq4()


@pytest.fixture
def rrbb4():
    return fixture_rrbb4()


@pytest.fixture
def hex6():
    return fixture_hex6()


@pytest.fixture
def oct8():
    return fixture_oct8()
