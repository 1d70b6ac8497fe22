"""Non-Abelian Dirac oscillator on a truncated Fock basis.

Hilbert space: Fock(axis 1 [x axis 2]) x spinor(4) x color(2), in that order.
The Hamiltonian is

    H = sum_i alpha_i pi_i + m beta,
    pi_i = p_i - i m omega x_i beta + s i m omega eta beta c_i,

with c_i = phi_a eps_{ib} f^{abc} Q_c and s = extra_sign (default -1).
"""

from dataclasses import dataclass, replace

import numpy as np

from .clifford import I2, I4, build_dirac_set
from .errors import (
    InternalConsistencyError,
    InvalidInputError,
    SizeError,
    UnsupportedDimensionError,
)
from .gauge_algebra import build_charges
from .linalg import dagger, hermiticity_residual, herm_eigen, max_abs
from .nonabelian_fields import color_coupling

MAX_DIM = 8192
INTERNAL = 8  # spinor x color
CONVERGENCE_TOL = 1e-8
HERMITIAN_TOL = 1e-12


def check_size(n, d):
    if d not in (1, 2):
        raise UnsupportedDimensionError(f"dimension must be 1 or 2, got {d}")
    if n < 1:
        raise InvalidInputError("truncation must be at least 1")
    total = n**d * INTERNAL
    if total > MAX_DIM:
        raise SizeError(f"matrix dimension {total} exceeds cap {MAX_DIM}")
    return total


@dataclass(frozen=True)
class OscParams:
    dimension: int
    mass: float
    omega: float
    truncation: int
    eta: float = 0.0
    phi: tuple = (0.0, 0.0, 0.0)
    extra_sign: int = -1
    guard_fraction: float = 0.5
    tolerance: float = 1e-10

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(float(v) for v in self.phi))
        if len(self.phi) != 3:
            raise InvalidInputError("phi needs 3 components")
        if not self.mass > 0:
            raise InvalidInputError("mass must be positive")
        if not self.omega > 0:
            raise InvalidInputError("omega must be positive")
        if self.extra_sign not in (-1, 1):
            raise InvalidInputError("extra_sign must be -1 or +1")
        if not 0 < self.guard_fraction <= 1:
            raise InvalidInputError("guard_fraction must lie in (0, 1]")
        check_size(self.truncation, self.dimension)

    @property
    def matrix_dim(self):
        return self.truncation**self.dimension * INTERNAL


@dataclass(frozen=True)
class FockOperators:
    n: int
    dimension: int
    x: tuple
    p: tuple

    @property
    def size(self):
        return self.n**self.dimension


def ladder(n):
    """Annihilation operator on n Fock states."""
    return np.diag(np.sqrt(np.arange(1, n, dtype=float)), k=1).astype(complex)


def _embed(op, axis, n, d):
    out = np.ones((1, 1), dtype=complex)
    for k in range(d):
        out = np.kron(out, op if k == axis else np.eye(n, dtype=complex))
    return out


def fock_ops(n, d, m, omega):
    """Position and momentum per axis with ladder operators at basis frequency omega."""
    check_size(n, d)
    if not (m > 0 and omega > 0):
        raise InvalidInputError("basis mass and frequency must be positive")
    a = ladder(n)
    ad = a.conj().T
    x = (a + ad) / np.sqrt(2 * m * omega)
    p = 1j * np.sqrt(m * omega / 2) * (ad - a)
    xs = tuple(_embed(x, k, n, d) for k in range(d))
    ps = tuple(_embed(p, k, n, d) for k in range(d))
    for arr in (*xs, *ps):
        arr.flags.writeable = False
    return FockOperators(n, d, xs, ps)


def guard_fock_indices(n, d, fraction):
    """Flat Fock indices whose every axis index is below fraction * n."""
    keep = np.arange(n) < fraction * n
    mask = keep
    for _ in range(d - 1):
        mask = np.logical_and.outer(mask, keep).ravel()
    return np.flatnonzero(mask)


def guard_indices(n, d, fraction, internal=INTERNAL):
    """Full-space indices of the guard band (Fock guard x all internal states)."""
    fock = guard_fock_indices(n, d, fraction)
    return (fock[:, None] * internal + np.arange(internal)[None, :]).ravel()


def guarded(m, idx):
    return m[np.ix_(idx, idx)]


def guarded_product(a, b, idx):
    """(a @ b) restricted to the guard block, without forming the full product."""
    return a[idx, :] @ b[:, idx]


def guarded_commutator(a, b, idx):
    return guarded_product(a, b, idx) - guarded_product(b, a, idx)


def lift(fock_op, spinor_op=None, color_op=None, fock_size=None):
    if fock_op is None:
        fock_op = np.eye(fock_size, dtype=complex)
    s = I4 if spinor_op is None else spinor_op
    c = I2 if color_op is None else color_op
    return np.kron(fock_op, np.kron(s, c))


def apply_internal(op, m):
    """(I_Fock x op) @ m for an 8x8 spinor-color operator, without the full product."""
    n = m.shape[0] // INTERNAL
    return np.einsum("ij,fjc->fic", op, m.reshape(n, INTERNAL, -1)).reshape(m.shape)


def nonminimal_momentum(f, g, cs, p):
    """pi_i per axis; the coupling uses p.mass and p.omega, the basis is f's."""
    mw = p.mass * p.omega
    out = []
    for i in range(f.dimension):
        pi = lift(f.p[i]) - 1j * mw * lift(f.x[i], g.beta)
        extra = p.extra_sign * 1j * mw * p.eta * lift(None, g.beta, color_coupling(p.phi, i, cs), f.size)
        out.append(pi + extra)
    return tuple(out)


def abelian_momentum(f, g, p):
    """pi_i = p_i - i m omega x_i beta, built without the color term."""
    mw = p.mass * p.omega
    return tuple(lift(f.p[i]) - 1j * mw * lift(f.x[i], g.beta) for i in range(f.dimension))


@dataclass(frozen=True)
class HamiltonianMatrix:
    matrix: np.ndarray
    params: OscParams
    hermiticity_residual: float
    layout: str = "fock x spinor x color"


def build_hamiltonian(pi, g, p):
    fock_size = pi[0].shape[0] // INTERNAL
    h = p.mass * lift(None, g.beta, fock_size=fock_size)
    for alpha, pi_i in zip(g.alpha, pi):
        h = h + apply_internal(np.kron(alpha, I2), pi_i)
    herm = hermiticity_residual(h)
    if herm > HERMITIAN_TOL * max(1.0, max_abs(h)):
        raise InternalConsistencyError(f"assembled Hamiltonian is not Hermitian (residual {herm:.3e})")
    h.flags.writeable = False
    return HamiltonianMatrix(h, p, herm)


def assemble(p, g=None, cs=None):
    """Fock operators at basis frequency omega, then the full Hamiltonian."""
    g = g or build_dirac_set()
    cs = cs or build_charges(1.0)
    f = fock_ops(p.truncation, p.dimension, p.mass, p.omega)
    return build_hamiltonian(nonminimal_momentum(f, g, cs, p), g, p), f


def squared_identity_residual(h, f, g, p):
    """Guard-banded relative residual of H^2 = p^2 + m^2 w^2 x^2 + m^2 - m w beta (d = 1, eta = 0)."""
    if f.dimension != 1:
        raise UnsupportedDimensionError("the squared-Hamiltonian identity is checked in d = 1")
    m, w = p.mass, p.omega
    x, mom = f.x[0], f.p[0]
    rhs = lift(mom @ mom + (m * w) ** 2 * (x @ x) + m * m * np.eye(f.size)) - m * w * lift(None, g.beta, fock_size=f.size)
    idx = guard_indices(f.n, 1, p.guard_fraction)
    h2 = guarded_product(h.matrix, h.matrix, idx)
    scale = max(1.0, max_abs(h2))
    return max_abs(h2 - guarded(rhs, idx)) / scale


def canonical_commutator_residual(f, fraction=0.5):
    """max over axes of the guard-banded |[x_i, p_i] - i I|."""
    idx = guard_fock_indices(f.n, f.dimension, fraction)
    worst = 0.0
    for x, mom in zip(f.x, f.p):
        c = x @ mom - mom @ x - 1j * np.eye(f.size)
        worst = max(worst, max_abs(guarded(c, idx)))
    return worst


@dataclass(frozen=True)
class SpectrumResult:
    eigenvalues: np.ndarray
    converged: np.ndarray | None
    hermiticity_residual: float
    params: OscParams

    @property
    def converged_count(self):
        return None if self.converged is None else int(np.count_nonzero(self.converged))

    def positive_levels(self, tol=1e-6, converged_only=True):
        """Distinct positive eigenvalues (clusters closer than tol merged), ascending."""
        vals = self.eigenvalues
        if converged_only and self.converged is not None:
            vals = vals[self.converged]
        vals = np.sort(vals[vals > 0])
        levels = []
        for v in vals:
            if not levels or v - levels[-1] > tol:
                levels.append(float(v))
        return levels


def match_from_zero(coarse, fine):
    """Pair eigenvalues by rank counted outward from zero on each side.

    Returns the absolute change of each coarse eigenvalue (ascending order of
    ``coarse``). Truncation corrupts the largest |E| first, so ranks are
    anchored at the spectral middle rather than at the bottom.
    """
    coarse = np.asarray(coarse)
    fine = np.asarray(fine)
    moved = np.full(coarse.shape, np.inf)
    cn = np.flatnonzero(coarse < 0)[::-1]
    cp = np.flatnonzero(coarse >= 0)
    fn = np.sort(fine[fine < 0])[::-1]
    fp = np.sort(fine[fine >= 0])
    for src, dst in ((cn, fn), (cp, fp)):
        k = min(len(src), len(dst))
        moved[src[:k]] = np.abs(coarse[src[:k]] - dst[:k])
    return moved


def spectrum(h, check_convergence=False, g=None, cs=None):
    """All eigenvalues; optionally flag those stable under truncation N -> 2N."""
    p = h.params
    res = herm_eigen(h.matrix, p.tolerance)
    converged = None
    if check_convergence:
        fine_params = replace(p, truncation=2 * p.truncation)
        fine, _ = assemble(fine_params, g, cs)
        fine_vals = herm_eigen(fine.matrix, p.tolerance).eigenvalues
        moved = match_from_zero(res.eigenvalues, fine_vals)
        converged = moved <= CONVERGENCE_TOL * np.maximum(1.0, np.abs(res.eigenvalues))
    return SpectrumResult(res.eigenvalues, converged, h.hermiticity_residual, p)


def _nonzero(value, name):
    if value == 0:
        raise InvalidInputError(f"{name} must be nonzero")


def lambda_from_moment(m, omega, kappa, e_charge):
    """Coupling that turns the anomalous-moment term into the oscillator: 2 m^2 omega / (kappa e)."""
    _nonzero(kappa * e_charge, "kappa * e_charge")
    return 2.0 * m * m * omega / (kappa * e_charge)


def lambda_from_field(m, omega, e_charge, b_field):
    """2 m omega / (e B)."""
    _nonzero(e_charge * b_field, "e_charge * B")
    return 2.0 * m * omega / (e_charge * b_field)


def field_from_orbit(m, omega, q_charge):
    """Magnetic field holding a charge q on a circular orbit: B = m omega / q."""
    _nonzero(q_charge, "q_charge")
    return m * omega / q_charge


def is_hermitian(h, rel_tol=HERMITIAN_TOL):
    return max_abs(h - dagger(h)) <= rel_tol * max(1.0, max_abs(h))
