import numpy as np
import pytest

from conftest import random_hermitian
from nadosc import kernels
from nadosc.linalg import max_abs

BACKENDS = ["python"] + (["compiled"] if kernels.BACKEND == "compiled" else [])


@pytest.fixture(params=BACKENDS)
def impl(request):
    return kernels.backend_module(request.param)


def test_backend_selected():
    assert kernels.BACKEND in ("compiled", "python")


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.backend_module("fortran")


@pytest.mark.parametrize("n", [1, 2, 3, 17, 64])
def test_tridiagonal_ql_matches_numpy(impl, n):
    h = random_hermitian(n, n)
    d, e, q = impl.tridiagonalize(h)
    assert max_abs(q.conj().T @ q - np.eye(n)) <= 1e-12
    t = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    assert max_abs(q @ t @ q.conj().T - h) <= 1e-12 * max(1.0, max_abs(h))
    w, z = impl.tridiag_eigen(d, e)
    v = q @ z
    assert max_abs(h @ v - v * w) <= 1e-11 * max(1.0, max_abs(h))
    assert np.allclose(np.sort(w), np.linalg.eigvalsh(h), atol=1e-11 * max(1.0, max_abs(h)))


@pytest.mark.parametrize("n", [1, 2, 5, 32])
def test_jacobi_matches_numpy(impl, n):
    h = random_hermitian(n, 100 + n)
    w, v, sweeps = impl.jacobi_eigen(h, 1e-12, 100)
    assert sweeps <= 100
    assert max_abs(h @ v - v * w) <= 1e-10 * max(1.0, max_abs(h))
    assert np.allclose(np.sort(w), np.linalg.eigvalsh(h), atol=1e-10)


def test_jacobi_sweep_cap_raises(impl):
    with pytest.raises(ArithmeticError):
        impl.jacobi_eigen(random_hermitian(30, 1), 1e-12, 1)


def test_backends_agree():
    if len(BACKENDS) < 2:
        pytest.skip("compiled extension not built")
    h = random_hermitian(48, 7)
    py, cc = (kernels.backend_module(b) for b in BACKENDS)
    wp = np.sort(py.tridiag_eigen(*py.tridiagonalize(h)[:2])[0])
    wc = np.sort(cc.tridiag_eigen(*cc.tridiagonalize(h)[:2])[0])
    assert np.max(np.abs(wp - wc)) <= 1e-12


def test_degenerate_spectrum(impl):
    h = np.kron(np.diag([1.0, 2.0, 3.0]), np.eye(4)).astype(complex)
    d, e, q = impl.tridiagonalize(h)
    w, _ = impl.tridiag_eigen(d, e)
    assert np.allclose(np.sort(w), np.repeat([1.0, 2.0, 3.0], 4), atol=1e-14)
