import pytest

from edslab.curve import WeierstrassCurve


@pytest.fixture
def e37():
    """y^2 + y = x^3 - x with P = (0, 0), conductor 37."""
    E = WeierstrassCurve(0, 0, 1, -1, 0)
    return E, E.point(0, 0)
