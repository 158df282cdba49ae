import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xxring.numkernel import (
    SIGMA0,
    SIGMA1,
    SIGMA2,
    SIGMA3,
    as_matrix,
    dagger,
    hermitian_eig,
    ket,
    kron,
    partial_trace,
    projector,
    validate_density,
)
from xxring.ring import RingParams, build_hamiltonian, thermal_state

from conftest import random_density, random_hermitian


def test_kron_examples():
    np.testing.assert_array_equal(kron(SIGMA0, SIGMA0), np.eye(4))
    np.testing.assert_array_equal(kron(SIGMA3, SIGMA0), np.diag([1, 1, -1, -1]))
    np.testing.assert_array_equal(kron(SIGMA1, SIGMA1) @ ket("00"), ket("11"))


def test_kron_left_fold():
    a, b, c = SIGMA1, SIGMA2, SIGMA3
    np.testing.assert_array_equal(kron(a, b, c), np.kron(np.kron(a, b), c))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_kron_mixed_product(seed):
    rng = np.random.default_rng(seed)
    a, b, c, d = (random_hermitian(rng, 2) + 1j * random_hermitian(rng, 2) for _ in range(4))
    np.testing.assert_allclose(kron(a, b) @ kron(c, d), kron(a @ c, b @ d), atol=1e-12)


def test_dagger(rng):
    np.testing.assert_array_equal(dagger(SIGMA2), SIGMA2)
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    np.testing.assert_array_equal(dagger(dagger(a)), a)
    v = np.array([1 + 2j, 3 - 1j])
    np.testing.assert_array_equal(dagger(v), [[1 - 2j, 3 + 1j]])


def test_as_matrix_is_bit_exact():
    entries = [0.1, 1 / 3, 2.0**-40, 1e300]
    a = as_matrix(entries, rows=2)
    assert a.shape == (2, 2)
    assert list(a.ravel().real) == entries
    with pytest.raises(ValueError):
        as_matrix([1, 2, 3], rows=2, cols=2)


def test_partial_trace_product_state():
    rho = projector(ket("000"))
    np.testing.assert_array_equal(partial_trace(rho, [2, 2, 2], {0, 1}), projector(ket("00")))


def test_partial_trace_maximally_mixed():
    np.testing.assert_allclose(partial_trace(np.eye(8) / 8, [2, 2, 2], [0, 1]), np.eye(4) / 4, atol=1e-15)


def test_partial_trace_of_product_operator(rng):
    a, b = random_density(rng, 2), random_density(rng, 4)
    np.testing.assert_allclose(partial_trace(kron(a, b), [2, 4], [0]), a, atol=1e-14)
    np.testing.assert_allclose(partial_trace(kron(a, b), [2, 4], [1]), b, atol=1e-14)


def test_partial_trace_keeps_basis_order():
    # |01><01| on (A,B) with C in |1>: keeping {A, C} must give |01>, keeping {C, A} the same
    rho = projector(ket("011"))
    np.testing.assert_array_equal(partial_trace(rho, [2, 2, 2], [0, 2]), projector(ket("01")))
    np.testing.assert_array_equal(partial_trace(rho, [2, 2, 2], [2, 0]), projector(ket("01")))


def test_partial_trace_dimension_mismatch():
    with pytest.raises(ValueError):
        partial_trace(np.eye(8), [2, 2], [0])
    with pytest.raises(ValueError):
        partial_trace(np.eye(4), [2, 2], [3])


def test_cyclic_reductions_agree():
    chi = thermal_state(RingParams(1.0, 0.0, 1.0))
    ab = partial_trace(chi, [2, 2, 2], [0, 1])
    bc = partial_trace(chi, [2, 2, 2], [1, 2])
    ac = partial_trace(chi, [2, 2, 2], [0, 2])
    np.testing.assert_allclose(ab, bc, atol=1e-12)
    np.testing.assert_allclose(ab, ac, atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([(2, 2, 2), (2, 4), (4, 2), (2, 2, 2, 2)]))
def test_partial_trace_preserves_trace(seed, dims):
    rng = np.random.default_rng(seed)
    n = int(np.prod(dims))
    rho = random_hermitian(rng, n)
    for keep in ([0], [len(dims) - 1], list(range(len(dims) - 1))):
        assert abs(np.trace(partial_trace(rho, dims, keep)) - np.trace(rho)) < 1e-12 * max(1, abs(np.trace(rho)))


def test_hermitian_eig_paulis():
    w, v = hermitian_eig(SIGMA3)
    np.testing.assert_allclose(w, [1, -1])
    np.testing.assert_allclose(np.abs(v[:, 0]), [1, 0])
    np.testing.assert_allclose(np.abs(v[:, 1]), [0, 1])

    w, v = hermitian_eig(SIGMA1)
    np.testing.assert_allclose(w, [1, -1])
    s = 1 / np.sqrt(2)
    assert abs(abs(np.vdot(v[:, 0], [s, s])) - 1) < 1e-12
    assert abs(abs(np.vdot(v[:, 1], [s, -s])) - 1) < 1e-12


def test_hermitian_eig_ring_hamiltonian():
    w, _ = hermitian_eig(build_hamiltonian(RingParams(1.0, 0.0, 1.0)))
    np.testing.assert_allclose(w, [2, 2, 0, 0, -1, -1, -1, -1], atol=1e-12)


def test_hermitian_eig_rejects_non_hermitian():
    with pytest.raises(ValueError):
        hermitian_eig(np.array([[0, 1], [0, 0]], dtype=complex))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([2, 3, 4, 8]))
def test_hermitian_eig_properties(seed, n):
    rng = np.random.default_rng(seed)
    a = random_hermitian(rng, n)
    w, v = hermitian_eig(a)
    assert np.all(np.diff(w) <= 0)
    np.testing.assert_allclose(v.conj().T @ v, np.eye(n), atol=1e-10)
    np.testing.assert_allclose(a @ v, v * w, atol=1e-9 * np.max(np.abs(a)))
    np.testing.assert_allclose((v * w) @ v.conj().T, a, atol=1e-9)
    w2, _ = hermitian_eig(a)
    np.testing.assert_array_equal(w, w2)


def test_validate_density():
    assert validate_density(np.eye(8) / 8, 1e-12)
    assert not validate_density(SIGMA1)
    assert not validate_density(np.diag([1.5, -0.5]))
    assert validate_density(thermal_state(RingParams(-1.0, 0.5, 1 / 0.7)), 1e-10)
