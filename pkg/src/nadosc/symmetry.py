"""Planar angular momentum and its commutators with the oscillator Hamiltonian.

All operator identities are evaluated on the guard band only; the commutator
blocks are formed from row/column slices so the full products are never built.
"""

from dataclasses import dataclass

import numpy as np

from .clifford import EPS3
from .errors import UnsupportedDimensionError
from .hamiltonian import (
    abelian_momentum,
    build_hamiltonian,
    guard_fock_indices,
    guard_indices,
    guarded,
    guarded_commutator,
    lift,
)
from .linalg import hermiticity_residual, max_abs
from .report import CheckReport

CLOSED_FORM_TOL = 1e-8
NON_CONSERVATION_FLOOR = 0.1
LADDER_TOL = 1e-10


@dataclass(frozen=True)
class AngularOps:
    lz: np.ndarray
    sz_half: np.ndarray
    jz: np.ndarray
    lz_fock: np.ndarray


def build_angular(f, g):
    if f.dimension != 2:
        raise UnsupportedDimensionError("angular momentum needs dimension 2")
    (x, y), (px, py) = f.x, f.p
    lz_fock = x @ py - y @ px
    lz = lift(lz_fock)
    sz_half = lift(None, g.sigma_big[2] / 2, fock_size=f.size)
    return AngularOps(lz, sz_half, lz + sz_half, lz_fock)


def cross_alpha_p(f, g):
    """(alpha x p)_z = alpha_1 p_y - alpha_2 p_x."""
    return lift(f.p[1], g.alpha[0]) - lift(f.p[0], g.alpha[1])


def cross_x_alpha_beta(f, g):
    """(x x alpha)_z beta = (x alpha_2 - y alpha_1) beta."""
    return lift(f.x[0], g.alpha[1] @ g.beta) - lift(f.x[1], g.alpha[0] @ g.beta)


def lz_closed_form(f, g, mass, omega):
    return 1j * cross_alpha_p(f, g) - mass * omega * cross_x_alpha_beta(f, g)


def spin_closed_form(f, g, mass, omega):
    return -lz_closed_form(f, g, mass, omega)


def angular_report(a, f, fraction=0.5):
    """Hermiticity of L_z, Sigma_3/2, J_z and the guard-band ladder relation."""
    rep = CheckReport("angular momentum operators")
    for name, op in (("L_z", a.lz), ("Sigma_3/2", a.sz_half), ("J_z", a.jz)):
        rep.check_le(f"{name} Hermitian", hermiticity_residual(op), 1e-12)
    idx = guard_fock_indices(f.n, 2, fraction)
    for sign, label in ((1, "+"), (-1, "-")):
        ladder = f.x[0] + sign * 1j * f.x[1]
        r = max_abs(guarded_commutator(a.lz_fock, ladder, idx) - sign * guarded(ladder, idx))
        rep.check_le(f"[L_z, x {label} iy] = {label}(x {label} iy)", r, LADDER_TOL)
    return rep


def commutator_report(a, h, f, g, p):
    """Guard-banded commutator residuals of L_z, Sigma_3/2 and J_z with H."""
    idx = guard_indices(f.n, 2, p.guard_fraction)
    m, w = p.mass, p.omega
    rep = CheckReport(f"angular momentum commutators (m={m:g}, omega={w:g}, eta={p.eta:g})")

    h_ab = build_hamiltonian(abelian_momentum(f, g, p), g, p).matrix
    c_l = guarded_commutator(a.lz, h_ab, idx)
    c_s = guarded_commutator(a.sz_half, h_ab, idx)
    c_j = guarded_commutator(a.jz, h_ab, idx)
    closed = guarded(lz_closed_form(f, g, m, w), idx)

    rep.check_le("[L_z,H] == i(alpha x p)_z - m omega (x x alpha)_z beta", max_abs(c_l - closed), CLOSED_FORM_TOL)
    rep.check_le("[Sigma_3/2,H] == -i(alpha x p)_z + m omega (x x alpha)_z beta", max_abs(c_s + closed), CLOSED_FORM_TOL)
    rep.check_le("[J_z,H_abelian] == 0", max_abs(c_j), CLOSED_FORM_TOL)
    rep.check_le("[L_z,H] + [Sigma_3/2,H] == [J_z,H]", max_abs(c_l + c_s - c_j), 1e-12 * max(1.0, max_abs(c_l)))

    for name, c in (("L_z", c_l), ("Sigma_3/2", c_s)):
        norm = max_abs(c)
        rep.check(f"{name} not conserved alone (max|[{name},H]| > {NON_CONSERVATION_FLOOR:g})", norm, norm > NON_CONSERVATION_FLOOR)

    literal = guarded(lz_closed_form(f, g, m, 1.0), idx)
    rep.finding(
        "[L_z,H] - closed form without omega",
        max_abs(c_l - literal),
        note="zero only at omega = 1",
    )

    c_full = guarded_commutator(a.jz, h.matrix, idx)
    rep.finding(
        "[J_z,H] with the color term",
        max_abs(c_full),
        note=f"eta={p.eta:g}, phi=({', '.join(f'{v:g}' for v in p.phi)}); measured, not asserted",
    )
    return rep


def spin_identity_check(g):
    """Residuals of Sigma_k + (i/2) eps_kij alpha_i alpha_j; each must be exactly 0."""
    rep = CheckReport("spin from alpha x alpha")
    for k in range(3):
        acc = g.sigma_big[k].astype(complex)
        for i in range(3):
            for j in range(3):
                if EPS3[k, i, j]:
                    acc = acc + 0.5j * EPS3[k, i, j] * (g.alpha[i] @ g.alpha[j])
        r = max_abs(acc)
        rep.check(f"Sigma_{k + 1} == -(i/2)(alpha x alpha)_{k + 1}", r, r == 0.0)
    return rep
