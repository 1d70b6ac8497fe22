"""Dense complex matrix helpers and the Hermitian eigensolver.

Matrices are plain 2-D ``complex128`` NumPy arrays. Every function returns
a new array and leaves its inputs untouched.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConvergenceError, HermiticityError, InvalidInputError

COMMUTATOR = "commutator"
ANTICOMMUTATOR = "anticommutator"

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def as_matrix(a):
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise InvalidInputError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    return m


def frozen(a):
    """Read-only complex copy of ``a``."""
    m = np.array(a, dtype=np.complex128)
    m.flags.writeable = False
    return m


def kron(a, b):
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(*factors):
    out = as_matrix(factors[0])
    for f in factors[1:]:
        out = np.kron(out, as_matrix(f))
    return out


def bracket(a, b, kind=COMMUTATOR):
    """``ab - ba`` (commutator) or ``ab + ba`` (anticommutator)."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[0] != a.shape[1] or a.shape != b.shape:
        raise InvalidInputError(f"bracket needs equal square matrices, got {a.shape} and {b.shape}")
    ab = a @ b
    ba = b @ a
    if kind == COMMUTATOR:
        return ab - ba
    if kind == ANTICOMMUTATOR:
        return ab + ba
    raise InvalidInputError(f"unknown bracket kind {kind!r}")


def commutator(a, b):
    return bracket(a, b, COMMUTATOR)


def anticommutator(a, b):
    return bracket(a, b, ANTICOMMUTATOR)


def max_abs(a):
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a)))


def dagger(a):
    return np.conjugate(np.transpose(a))


def hermiticity_residual(a):
    a = as_matrix(a)
    return max_abs(a - dagger(a))


@dataclass(frozen=True)
class EigenResult:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residual: float
    method: str = "tridiagonal-ql"
    sweeps: int = 0

    def __len__(self):
        return len(self.eigenvalues)


def herm_eigen(h, tol=1e-10, method="tridiagonal"):
    """Diagonalize a Hermitian matrix.

    ``method`` is ``"tridiagonal"`` (Householder reduction then implicit QL,
    the default) or ``"jacobi"`` (cyclic Jacobi, off-diagonal Frobenius mass
    below 1e-12 of the diagonal mass, 100-sweep cap). Both are deterministic.

    The input must satisfy ``max|h - h^dagger| <= tol * max(1, max|h|)``;
    otherwise :class:`HermiticityError` is raised. The result is checked
    against ``residual <= tol * max(1, max|h|)`` and orthonormality of the
    eigenvectors to 1e-10; a failure raises :class:`ConvergenceError`.
    """
    h = as_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise InvalidInputError(f"herm_eigen needs a square matrix, got {h.shape}")
    scale = max(1.0, max_abs(h))
    herm = hermiticity_residual(h)
    if herm > tol * scale:
        raise HermiticityError(herm, tol * scale)
    hs = 0.5 * (h + dagger(h))

    sweeps = 0
    try:
        if method == "tridiagonal":
            d, e, q = kernels.tridiagonalize(hs)
            w, z = kernels.tridiag_eigen(d, e)
            v = q @ z
            label = "tridiagonal-ql"
        elif method == "jacobi":
            w, v, sweeps = kernels.jacobi_eigen(hs, 1e-12, 100)
            label = "jacobi"
        else:
            raise InvalidInputError(f"unknown eigensolver method {method!r}")
    except ArithmeticError as exc:
        raise ConvergenceError(str(exc)) from exc

    order = np.argsort(w, kind="stable")
    w = np.ascontiguousarray(w[order])
    v = np.ascontiguousarray(v[:, order])
    residual = max_abs(hs @ v - v * w)
    if residual > tol * scale:
        raise ConvergenceError(f"eigenpair residual {residual:.3e} exceeds {tol * scale:.3e}")
    orth = max_abs(dagger(v) @ v - np.eye(len(w)))
    if orth > 1e-10:
        raise ConvergenceError(f"eigenvectors lost orthonormality ({orth:.3e})")
    w.flags.writeable = False
    v.flags.writeable = False
    return EigenResult(w, v, residual, label, sweeps)
