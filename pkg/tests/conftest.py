import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from okbody import make_case


@pytest.fixture(scope="session")
def p2():
    return make_case("p2")


@pytest.fixture(scope="session")
def p3():
    return make_case("p3")


@pytest.fixture(scope="session")
def quadric():
    return make_case("quadric_surface")


@pytest.fixture(scope="session")
def fermat():
    return make_case("fermat_cubic")
