import pytest

from starcert.reduction import build_h3_reduction


@pytest.fixture(scope="session")
def reduction():
    """The H3 majorant reduction; built once, it is immutable."""
    return build_h3_reduction()
