import pytest

from equichar.moduli import CharacterCalculator


@pytest.fixture(scope="session")
def calculator():
    """One shared in-memory calculator so expensive characters are computed once."""
    return CharacterCalculator()
