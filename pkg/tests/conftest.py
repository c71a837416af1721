import pytest

from wittcurve import CurveConfig

CONFIGS = [CurveConfig(q, r) for q in (1, 3) for r in (0, 1, 2)]


@pytest.fixture(params=CONFIGS, ids=lambda c: f"q{c.q_mod_4}r{c.picard_rank}")
def cfg(request):
    """Every small configuration: both residue classes, ranks 0 to 2."""
    return request.param


@pytest.fixture
def q3r1():
    return CurveConfig(3, 1)


@pytest.fixture
def q1r1():
    return CurveConfig(1, 1)
