from pathlib import Path

import pytest

from isgact.catalog import four_point_action, three_point_action, two_object_hybrid

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def hybrid():
    return two_object_hybrid()


@pytest.fixture(scope="session")
def four_point(hybrid):
    return four_point_action(hybrid)


@pytest.fixture(scope="session")
def three_point(hybrid):
    return three_point_action(hybrid)


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
