"""U(2) = U(1) x SU(2) generators and charges in the 2-dim color space.

T^0 = I, T^a = sigma^a / 2 with [T^a, T^b] = i eps^{abc} T^c.
Charges are Q^0 = I and Q^a = kappa_q sigma^a. The default kappa_q = 1 gives
[Q^a, Q^b] = 2i eps^{abc} Q^c; in general the bracket constant is
c_Q = 2 kappa_q, which :func:`measure_charge_constant` recovers numerically.
"""

from dataclasses import dataclass, replace

import numpy as np

from .clifford import EPS3, I2
from .errors import InvalidInputError
from .linalg import PAULI, commutator, frozen, max_abs
from .report import CheckReport

LIE_TOL = 1e-15


@dataclass(frozen=True)
class ChargeSet:
    t0: np.ndarray
    t: tuple
    q0: np.ndarray
    q: tuple
    kappa_q: float
    f: np.ndarray

    def with_structure_constants(self, f):
        f = np.array(f)
        f.flags.writeable = False
        return replace(self, f=f)


def build_charges(kappa_q=1.0):
    kappa_q = float(kappa_q)
    if kappa_q == 0.0 or not np.isfinite(kappa_q):
        raise InvalidInputError("kappa_q must be finite and nonzero")
    f = EPS3.copy()
    f.flags.writeable = False
    return ChargeSet(
        t0=frozen(I2),
        t=tuple(frozen(s / 2) for s in PAULI),
        q0=frozen(I2),
        q=tuple(frozen(kappa_q * s) for s in PAULI),
        kappa_q=kappa_q,
        f=f,
    )


def contract_f(f, a, b, mats):
    """sum_c f^{abc} mats[c]."""
    out = np.zeros_like(mats[0])
    for c in range(3):
        if f[a, b, c]:
            out = out + f[a, b, c] * mats[c]
    return out


def measure_charge_constant(cs):
    """Least-squares c in [Q^a, Q^b] = c * i f^{abc} Q^c over all a != b.

    Returns NaN when the right-hand side vanishes identically.
    """
    num = 0.0
    den = 0.0
    for a in range(3):
        for b in range(3):
            if a == b:
                continue
            lhs = commutator(cs.q[a], cs.q[b])
            rhs = 1j * contract_f(cs.f, a, b, cs.q)
            num += float(np.vdot(rhs, lhs).real)
            den += float(np.vdot(rhs, rhs).real)
    return num / den if den else float("nan")


def jacobi_identity_residual(mats):
    worst = 0.0
    for a in range(3):
        for b in range(3):
            for c in range(3):
                x, y, z = mats[a], mats[b], mats[c]
                s = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))
                worst = max(worst, max_abs(s))
    return worst


def verify_lie(cs):
    rep = CheckReport("Lie algebra of the U(2) generators")
    for a in range(3):
        for b in range(3):
            r = max_abs(commutator(cs.t[a], cs.t[b]) - 1j * contract_f(cs.f, a, b, cs.t))
            rep.check_le(f"[T^{a + 1},T^{b + 1}] = i f^{a + 1}{b + 1}c T^c", r, LIE_TOL)

    worst = max(abs(np.trace(cs.t[a] @ cs.t[b]) - (0.5 if a == b else 0.0)) for a in range(3) for b in range(3))
    rep.check_le("tr(T^a T^b) = delta^ab / 2", worst, LIE_TOL)
    herm = max(max_abs(q - q.conj().T) for q in cs.q)
    rep.check("Q^a Hermitian", herm, herm == 0.0)
    trace = max(abs(np.trace(q)) for q in cs.q)
    rep.check_le("Q^a traceless", trace, LIE_TOL)
    jac = jacobi_identity_residual(cs.q)
    rep.check_le("Jacobi identity for Q^a", jac, LIE_TOL * max(1.0, abs(cs.kappa_q) ** 3))

    c_q = measure_charge_constant(cs)
    if cs.kappa_q == 1.0:
        rep.check_le("c_Q = 2 in [Q^a,Q^b] = c_Q i f^abc Q^c", abs(c_q - 2.0), LIE_TOL)
    rep.finding("c_Q measured", c_q, note=f"kappa_q = {cs.kappa_q:g}; expected 2 kappa_q")
    literal = measure_charge_constant(build_charges(0.25))
    rep.finding("c_Q for Q^a = T^a/2", literal, note="kappa_q = 1/4, so c_Q = 1/2 instead of 2")
    return rep
