"""Small dense complex linear algebra for qubit operators (dimensions 2..16).

Operators and density matrices are plain ``numpy`` arrays of dtype
``complex128``.  Basis ordering is the usual big-endian one: for three qubits
the index of ``|a b c>`` is ``4*a + 2*b + c``, and ``|0>`` is the +1
eigenstate of ``sigma_z``.
"""

import math
from functools import reduce

import numpy as np

SIGMA0 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA0, SIGMA1, SIGMA2, SIGMA3)

HERMITIAN_TOL = 1e-10


def as_matrix(entries, rows=None, cols=None):
    """Build a complex matrix from nested sequences or a flat row-major list.

    Values are stored unchanged.
    """
    a = np.array(entries, dtype=complex)
    if rows is not None:
        cols = cols if cols is not None else a.size // rows
        if rows * cols != a.size:
            raise ValueError(f"{a.size} entries cannot fill a {rows}x{cols} matrix")
        a = a.reshape(rows, cols)
    return a


def ket(bits):
    """Computational basis column vector for a bit string such as ``'011'``."""
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


def projector(v):
    """Rank-one operator ``|v><v|``."""
    v = np.asarray(v, dtype=complex).ravel()
    return np.outer(v, v.conj())


def kron(*ops):
    """Kronecker product of any number of operators, folded from the left."""
    if not ops:
        raise ValueError("kron needs at least one operand")
    return reduce(np.kron, (np.asarray(o, dtype=complex) for o in ops))


def dagger(a):
    """Conjugate transpose.  A 1-d vector is treated as a column."""
    a = np.asarray(a, dtype=complex)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    return a.conj().T


def hermitize(a):
    return 0.5 * (a + dagger(a))


def partial_trace(rho, dims, keep):
    """Reduce ``rho`` onto the subsystems listed in ``keep``.

    Parameters
    ----------
    rho : (D, D) array
        Operator on the tensor product of subsystems with dimensions ``dims``.
    dims : sequence of int
        Subsystem dimensions, most significant first.
    keep : iterable of int
        Indices of the subsystems to keep.  Their relative order in the result
        follows ``dims``, not the order given here.

    Returns
    -------
    ndarray
        Operator on the kept subsystems.
    """
    rho = np.asarray(rho, dtype=complex)
    dims = [int(d) for d in dims]
    keep = sorted(set(int(k) for k in keep))
    total = math.prod(dims)
    if rho.ndim != 2 or rho.shape != (total, total):
        raise ValueError(f"operator of shape {rho.shape} does not match subsystem dims {dims}")
    if any(k < 0 or k >= len(dims) for k in keep):
        raise ValueError(f"keep indices {keep} out of range for {len(dims)} subsystems")

    n = len(dims)
    traced = [i for i in range(n) if i not in keep]
    t = rho.reshape(dims + dims)
    # move row/col axes of the traced systems together, then sum the diagonal
    row = keep + traced
    col = [n + i for i in keep] + [n + i for i in traced]
    t = t.transpose(row + col)
    dk = math.prod(dims[i] for i in keep)
    dt = math.prod(dims[i] for i in traced)
    t = t.reshape(dk, dt, dk, dt)
    return np.einsum("ajbj->ab", t)


def hermitian_eig(a, tol=HERMITIAN_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(values, vectors)`` with eigenvalues in non-increasing order and
    the matching orthonormal eigenvectors as the columns of ``vectors``.

    Raises
    ------
    ValueError
        If ``a`` departs from Hermiticity by more than ``tol`` (max norm).
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if np.max(np.abs(a - dagger(a)), initial=0.0) > tol:
        raise ValueError("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh(hermitize(a))
    return w[::-1], v[:, ::-1]


def validate_density(rho, tol=1e-10):
    """True if ``rho`` is Hermitian, unit-trace and positive semidefinite within ``tol``."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return False
    if np.max(np.abs(rho - dagger(rho))) > tol:
        return False
    if abs(np.trace(rho) - 1.0) > tol:
        return False
    return bool(np.linalg.eigvalsh(hermitize(rho))[0] >= -tol)


def psd_sqrt(rho):
    """Principal square root of a positive semidefinite Hermitian matrix.

    Negative eigenvalues (round-off) are clipped to zero.
    """
    w, v = hermitian_eig(rho)
    return (v * np.sqrt(np.clip(w, 0.0, None))) @ dagger(v)


def real_trace(a, tol=1e-12):
    """Trace of an operator expected to have a real trace.

    Imaginary parts up to ``tol`` are dropped; larger ones raise ``ValueError``.
    """
    t = np.trace(a)
    if abs(t.imag) > tol * max(1.0, abs(t.real)):
        raise ValueError(f"trace has imaginary part {t.imag:g}")
    return float(t.real)
