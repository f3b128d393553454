import pytest

from qboson import DeformParams

# both deformation branches exercised throughout: a real q and a complex one
Q_VALUES = (1.3, 0.7 + 0.2j)


@pytest.fixture(params=Q_VALUES, ids=("q_real", "q_complex"))
def params(request) -> DeformParams:
    return DeformParams(q=request.param)


@pytest.fixture
def params_real() -> DeformParams:
    return DeformParams(q=1.3)
