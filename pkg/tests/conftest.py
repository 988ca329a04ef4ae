import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dpip.nf import NumberField

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture(scope="session")
def K5():
    """Q(sqrt(-5)) in its monogenic presentation x^2 + 5."""
    return NumberField([5, 0, 1])


@pytest.fixture(scope="session")
def K21():
    """Q(sqrt(-21)), discriminant -84."""
    return NumberField([21, 0, 1])


@pytest.fixture(scope="session")
def Ki():
    """Q(i)."""
    return NumberField([1, 0, 1])


@pytest.fixture(scope="session")
def K64():
    """The degree-32 cyclotomic field Q[z]/(z^32 + 1)."""
    return NumberField([1] + [0] * 31 + [1])


@pytest.fixture(scope="session")
def K180():
    """The degree-48 cyclotomic field of conductor 180."""
    coeffs = [0] * 49
    for i, c in [(48, 1), (42, 1), (30, -1), (24, -1), (18, -1), (6, 1), (0, 1)]:
        coeffs[i] = c
    return NumberField(coeffs)


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
