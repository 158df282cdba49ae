import numpy as np
import pytest
from hypothesis import strategies as st

from xxring.ring import RingParams


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (a + a.conj().T)


def random_density(rng, n, rank=None):
    rank = rank or n
    g = rng.normal(size=(n, rank)) + 1j * rng.normal(size=(n, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


couplings = st.floats(-2.0, 2.0).filter(lambda x: abs(x) > 0.05)
fields = st.floats(-4.0, 4.0)
betas = st.floats(0.05, 20.0)


@st.composite
def ring_params(draw):
    return RingParams(draw(couplings), draw(fields), draw(betas))
