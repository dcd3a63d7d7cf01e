import math

import pytest

from squeezelink.channel import ChannelParams
from squeezelink.conf import conf
from squeezelink.gaussian import SqueezeSpec
from squeezelink.receiver import OperatingPoint

# load builtins once and for all
from squeezelink.measurements import load_builtins
load_builtins()

NOMINAL_ETA = math.exp(-10)
NOMINAL_NBAR = 10000
NOMINAL_R = 0.576


@pytest.fixture(autouse=True)
def fresh_conf():
    yield
    conf.reset()


@pytest.fixture
def closed_form_c():
    """C = −η(n̄+½)·sinh(4r) for squeezing magnitudes in the e^(∓4r) convention."""
    def c(nbar, r, eta):
        return -eta * (nbar + .5) * math.sinh(4 * r)
    return c


@pytest.fixture
def nominal_point():
    return OperatingPoint(NOMINAL_NBAR, SqueezeSpec(NOMINAL_R, 'paper'),
                          ChannelParams.from_ratio(10))


@pytest.fixture
def unsqueezed_point(nominal_point):
    return nominal_point.with_squeeze(SqueezeSpec(0, 'paper'))


@pytest.fixture
def small_blocks():
    """Force many Monte Carlo blocks so worker scheduling is exercised."""
    conf.merge({'montecarlo': {'block-copies': 64}})
    yield
    conf.reset()
