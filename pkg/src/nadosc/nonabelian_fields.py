"""Non-Abelian potentials, field tensors and the sigma^{mu nu} F_{mu nu} coupling.

Color space is 2-dimensional; operators on spinor x color are 8x8 with the
spinor factor first. Field components carry lower indices and live in the
plane: mu, nu in {0, 1, 2}; every component with an index 3 is zero.

The mixed symbol eps_{ia} is eps_{ia3}: eps_{12} = +1, eps_{21} = -1.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from .clifford import EPS3, I2, sigma_tensor
from .errors import InvalidInputError
from .gauge_poly import COORDS, ZERO, ScalarPoly, to_fraction
from .linalg import PAULI, commutator, max_abs
from .report import CheckReport

ORACLE_TOL = 1e-12
HERMITIAN_TOL = 1e-15

# eps_{ia} = eps_{ia3}, i in {1, 2} (rows), a in {1, 2, 3} (cols)
EPS_MIXED = EPS3[:2, :, 2].copy()
EPS_MIXED.flags.writeable = False


@dataclass(frozen=True)
class GaugeParams:
    B0: float = 0.0
    E0: tuple = (0.0, 0.0)
    eta: float = 0.0
    lam: float = 0.0
    phi: tuple = (0.0, 0.0, 0.0)
    kappa: float = 1.0
    e_charge: float = 1.0
    q_charge: float = 1.0
    mass: float = 1.0
    omega: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "E0", tuple(float(v) for v in self.E0))
        object.__setattr__(self, "phi", tuple(float(v) for v in self.phi))
        if len(self.E0) != 2 or len(self.phi) != 3:
            raise InvalidInputError("E0 needs 2 components and phi needs 3")
        if not self.mass > 0:
            raise InvalidInputError("mass must be positive")
        if not self.omega > 0:
            raise InvalidInputError("omega must be positive")
        if not self.eta >= 0:
            raise InvalidInputError("eta must be non-negative")

    @property
    def moment_prefactor(self):
        """kappa e / 4m, the anomalous-moment coupling in front of sigma F."""
        return self.kappa * self.e_charge / (4.0 * self.mass)


@dataclass(frozen=True)
class Couplings:
    """Bare (eta, lam, phi) triple; unlike GaugeParams, eta may be negative."""

    eta: float
    lam: float
    phi: tuple


def color_coupling(phi, i, cs):
    """c_i = phi_a eps_{ib} f^{abc} Q_c for spatial direction i in {0, 1}."""
    out = np.zeros((2, 2), dtype=complex)
    for a in range(3):
        if not phi[a]:
            continue
        for b in range(3):
            if not EPS_MIXED[i, b]:
                continue
            for c in range(3):
                if cs.f[a, b, c]:
                    out = out + phi[a] * EPS_MIXED[i, b] * cs.f[a, b, c] * cs.q[c]
    return out


@dataclass(frozen=True)
class ExtraPotential:
    a0: np.ndarray
    ai: tuple

    def component(self, mu):
        if mu == 0:
            return self.a0
        if mu in (1, 2):
            return self.ai[mu - 1]
        return np.zeros((2, 2), dtype=complex)


def build_extra_potentials(p, cs):
    a0 = np.zeros((2, 2), dtype=complex)
    for a in range(3):
        a0 = a0 - p.lam * p.phi[a] * cs.q[a]
    ai = []
    for i in range(2):
        acc = np.zeros((2, 2), dtype=complex)
        for a in range(3):
            if EPS_MIXED[i, a]:
                acc = acc - p.eta * EPS_MIXED[i, a] * cs.q[a]
        ai.append(acc)
    return ExtraPotential(a0, tuple(ai))


def ext_field_tensor(ep):
    """F^Ext_{mu nu} = i [A_mu, A_nu] by direct commutators; shape (4, 4, 2, 2)."""
    out = np.zeros((4, 4, 2, 2), dtype=complex)
    for mu in range(4):
        for nu in range(4):
            out[mu, nu] = 1j * commutator(ep.component(mu), ep.component(nu))
    return out


def ext_field_tensor_closed(p, cs, spatial_sign=-1):
    """Closed forms for F^Ext.

    F_{0k} = -2 eta lambda phi_a eps_{kb} f^{abc} Q_c and
    F_{ik} = spatial_sign * 2 eta^2 eps_{ia} eps_{kb} f^{abc} Q_c.
    The direct commutator fixes spatial_sign = -1; +1 is the competing reference variant.
    """
    out = np.zeros((4, 4, 2, 2), dtype=complex)
    for k in range(2):
        m = -2.0 * p.eta * p.lam * color_coupling(p.phi, k, cs)
        out[0, k + 1] = m
        out[k + 1, 0] = -m
    for i in range(2):
        for k in range(2):
            acc = np.zeros((2, 2), dtype=complex)
            for a in range(3):
                for b in range(3):
                    w = EPS_MIXED[i, a] * EPS_MIXED[k, b]
                    if not w:
                        continue
                    for c in range(3):
                        if cs.f[a, b, c]:
                            acc = acc + w * cs.f[a, b, c] * cs.q[c]
            out[i + 1, k + 1] = spatial_sign * 2.0 * p.eta**2 * acc
    return out


@dataclass(frozen=True)
class NBFieldTensor:
    abelian: tuple  # 4x4 table of ScalarPoly
    color: np.ndarray  # (4, 4, 2, 2)

    def __getitem__(self, idx):
        mu, nu = idx
        return self.abelian[mu][nu], self.color[mu, nu]


def abelian_field_tensor(p):
    """Lower-index Abelian part: F_{0k} = lambda x_k + E0_k, F_{12} = B0.

    The E0/B0 parts come from differentiating A_0 = -x_i E0_i and
    A_i = -(B0/2) eps_ij x_j; the lambda part is lambda (u_mu x_nu - u_nu x_mu)
    with plain coordinates x_k.
    """
    lam = to_fraction(float(p.lam))
    b0 = to_fraction(float(p.B0))
    e0 = [to_fraction(float(v)) for v in p.E0]
    t, x, y, _ = COORDS
    pot = [-(x * e0[0] + y * e0[1]), y * (-b0 / 2), x * (b0 / 2), ZERO]
    table = [[ZERO] * 4 for _ in range(4)]
    for mu in range(4):
        for nu in range(4):
            f = pot[nu].diff(mu) - pot[mu].diff(nu)
            if mu == 0 and nu in (1, 2):
                f = f + COORDS[nu] * lam
            elif nu == 0 and mu in (1, 2):
                f = f - COORDS[mu] * lam
            table[mu][nu] = f
    return tuple(tuple(r) for r in table)


def nb_field_tensor(p, cs):
    return NBFieldTensor(abelian_field_tensor(p), ext_field_tensor(build_extra_potentials(p, cs)))


class OperatorPoly:
    """Polynomial in (t, x, y, z) with matrix coefficients."""

    def __init__(self, terms=None, size=8):
        self.size = size
        self.terms = {}
        for e, m in (terms or {}).items():
            m = np.asarray(m, dtype=complex)
            if np.any(m):
                self.terms[tuple(e)] = m

    @classmethod
    def from_scalar(cls, poly, matrix):
        return cls({e: float(c) * matrix for e, c in poly.terms.items()}, matrix.shape[0])

    def __add__(self, other):
        out = {e: m.copy() for e, m in self.terms.items()}
        for e, m in other.terms.items():
            out[e] = out[e] + m if e in out else m.copy()
        return OperatorPoly(out, self.size)

    def __sub__(self, other):
        return self + other.scale(-1.0)

    def scale(self, s):
        return OperatorPoly({e: s * m for e, m in self.terms.items()}, self.size)

    def left(self, mat):
        return OperatorPoly({e: mat @ m for e, m in self.terms.items()}, self.size)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), np.zeros((self.size, self.size), dtype=complex))

    def constant(self):
        return self.coefficient((0, 0, 0, 0))

    def linear(self, var):
        e = [0, 0, 0, 0]
        e[var] = 1
        return self.coefficient(e)

    def is_zero(self):
        return not self.terms

    def max_abs(self):
        return max((max_abs(m) for m in self.terms.values()), default=0.0)

    def __repr__(self):
        return f"OperatorPoly(monomials={sorted(self.terms)})"


@dataclass(frozen=True)
class InteractionTerm:
    total: OperatorPoly
    pieces: dict = field(default_factory=dict)


PIECES = ("position", "electric", "magnetic", "spacetime_color", "spatial_color")


def interaction_term(f, g, prefactor):
    """prefactor * sigma^{mu nu} F_{mu nu} on spinor x color, split into pieces.

    position: non-constant Abelian part; electric / magnetic: constant Abelian
    parts of F_{0k} / F_{ik}; spacetime_color / spatial_color: the F^Ext parts.
    """
    st = sigma_tensor(g)
    pieces = {name: OperatorPoly() for name in PIECES}
    for mu in range(4):
        for nu in range(4):
            if mu == nu:
                continue
            spatial = mu > 0 and nu > 0
            sig = prefactor * st[mu, nu]
            ab = f.abelian[mu][nu]
            const = ab.terms.get((0, 0, 0, 0), 0)
            rest = ab - ScalarPoly.const(const)
            pieces["position"] = pieces["position"] + OperatorPoly.from_scalar(rest, np.kron(sig, I2))
            key = "magnetic" if spatial else "electric"
            pieces[key] = pieces[key] + OperatorPoly({(0, 0, 0, 0): float(const) * np.kron(sig, I2)})
            key = "spatial_color" if spatial else "spacetime_color"
            pieces[key] = pieces[key] + OperatorPoly({(0, 0, 0, 0): np.kron(sig, f.color[mu, nu])})
    total = OperatorPoly()
    for name in PIECES:
        total = total + pieces[name]
    return InteractionTerm(total, pieces)


def nonminimal_substitution(f, g, p, drop_eta_squared=True, prefactor=None):
    """Per-direction shifts Delta_i with beta * (prefactor sigma F) = sum_i alpha_i Delta_i.

    sigma^{0k} = i alpha_k gives Delta_k = -2i prefactor beta F_{0k}; for i != k,
    sigma^{ik} = -i alpha_i alpha_k gives Delta_i += i prefactor beta alpha_k F_{ik}.
    With ``drop_eta_squared`` the F^Ext_{ik} (order eta^2) part is discarded.
    Returns three OperatorPoly values (x, y, z directions).
    """
    if prefactor is None:
        prefactor = p.moment_prefactor
    beta = g.beta
    deltas = []
    for i in range(1, 4):
        d = OperatorPoly()
        d = d + OperatorPoly.from_scalar(f.abelian[0][i], np.kron(-2j * prefactor * beta, I2))
        d = d + OperatorPoly({(0, 0, 0, 0): np.kron(-2j * prefactor * beta, f.color[0, i])})
        for k in range(1, 4):
            if k == i:
                continue
            op = 1j * prefactor * beta @ g.alpha[k - 1]
            d = d + OperatorPoly.from_scalar(f.abelian[i][k], np.kron(op, I2))
            if not drop_eta_squared:
                d = d + OperatorPoly({(0, 0, 0, 0): np.kron(op, f.color[i, k])})
        deltas.append(d)
    return tuple(deltas)


def decompose_color(m):
    """Real (a, b, c, d) with m = a I + b sigma_1 + c sigma_2 + d sigma_3 (Hermitian m)."""
    basis = (I2, *PAULI)
    return tuple(float(np.trace(b @ m).real / 2) for b in basis)


def render_color(m, digits=12):
    """Fixed-shape text "a*I + b*s1 + c*s2 + d*s3"; negative zero prints as 0."""
    coeffs = [round(v, digits) + 0.0 for v in decompose_color(m)]
    return " + ".join(f"{v:.{digits}g}*{name}" for v, name in zip(coeffs, ("I", "s1", "s2", "s3")))


def oracle_residuals(p, cs):
    """(temporal, spatial) max residual of direct commutators vs closed forms."""
    direct = ext_field_tensor(build_extra_potentials(p, cs))
    closed = ext_field_tensor_closed(p, cs)
    temporal = max(max_abs(direct[0, k] - closed[0, k]) for k in range(1, 4))
    temporal = max(temporal, max(max_abs(direct[k, 0] - closed[k, 0]) for k in range(1, 4)))
    spatial = max(max_abs(direct[i, k] - closed[i, k]) for i in range(1, 4) for k in range(1, 4))
    return temporal, spatial


def random_draws(n=100, seed=0):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        yield rng.uniform(-2, 2), rng.uniform(-2, 2), tuple(rng.uniform(-1, 1, 3))


def scaling_exponents(p, cs):
    """log2 growth of max|F^Ext_{0k}| and max|F^Ext_{ik}| when eta doubles."""
    def norms(eta):
        ft = ext_field_tensor(build_extra_potentials(replace(p, eta=eta), cs))
        return max_abs(ft[0, 1:3]), max_abs(ft[1, 2])

    t1, s1 = norms(p.eta)
    t2, s2 = norms(2 * p.eta)
    return float(np.log2(t2 / t1)), float(np.log2(s2 / s1))


REFERENCE = GaugeParams(eta=0.5, lam=1.5, phi=(0.3, -0.4, 0.8), kappa=1.0, e_charge=1.0, mass=1.0, omega=1.0)


def _ratio(a, b):
    """Least-squares real s with a ~ s b."""
    den = float(np.vdot(b, b).real)
    return float(np.vdot(b, a).real) / den if den else float("nan")


def fields_report(p, cs, g, draws=100, seed=0):
    rep = CheckReport("non-Abelian field tensor")
    ep = build_extra_potentials(p, cs)
    direct = ext_field_tensor(ep)
    temporal, spatial = oracle_residuals(p, cs)
    rep.check_le("F_ext direct == closed form (temporal)", temporal, ORACLE_TOL)
    rep.check_le("F_ext direct == closed form (spatial, minus sign)", spatial, ORACLE_TOL)

    worst = 0.0
    for eta, lam, phi in random_draws(draws, seed):
        worst = max(worst, *oracle_residuals(Couplings(eta, lam, phi), cs))
    rep.check_le(f"F_ext direct == closed form ({draws} random draws)", worst, ORACLE_TOL)

    herm = max(max_abs(direct[m, n] - direct[m, n].conj().T) for m in range(4) for n in range(4))
    rep.check_le("F_ext Hermitian", herm, HERMITIAN_TOL)
    anti = max(max_abs(direct[m, n] + direct[n, m]) for m in range(4) for n in range(4))
    rep.check("F_ext antisymmetric", anti, anti == 0.0)
    plus = ext_field_tensor_closed(p, cs, spatial_sign=+1)
    rep.finding("F_ext spatial: direct - closed form with plus sign", max_abs(direct[1:3, 1:3] - plus[1:3, 1:3]),
                note="reference forms disagree on this sign")

    # structural comparisons at a fixed reference point with all couplings on
    ref = REFERENCE
    fr = nb_field_tensor(ref, cs)
    it = interaction_term(fr, g, ref.moment_prefactor)
    pre2 = ref.kappa * ref.e_charge / (2 * ref.mass)
    reference_mid = np.zeros((8, 8), dtype=complex)
    reference_last = np.zeros((8, 8), dtype=complex)
    for i in range(2):
        reference_mid += -1j * pre2 * ref.lam * ref.eta * np.kron(g.alpha[i], color_coupling(ref.phi, i, cs))
        for k in range(2):
            acc = np.zeros((2, 2), dtype=complex)
            for a in range(3):
                for b in range(3):
                    for c in range(3):
                        acc = acc + EPS_MIXED[i, a] * EPS_MIXED[k, b] * cs.f[a, b, c] * cs.q[c]
            reference_last += 1j * pre2 * ref.eta**2 * np.kron(g.alpha[i] @ g.alpha[k], acc)
    mid = it.pieces["spacetime_color"].constant()
    last = it.pieces["spatial_color"].constant()
    rep.finding("spacetime-color term: direct / reference coefficient", _ratio(mid, reference_mid),
                note="reference kappa e/2m vs direct kappa e/m")
    rep.finding("spatial-color term: max|direct - reference|", max_abs(last - reference_last))

    # Abelian contraction is linear in position
    ab = GaugeParams(lam=p.lam if p.lam else 1.0, kappa=p.kappa, e_charge=p.e_charge, mass=p.mass, omega=p.omega)
    it_ab = interaction_term(nb_field_tensor(ab, cs), g, ab.moment_prefactor)
    want = OperatorPoly({
        (0, 1, 0, 0): 1j * ab.kappa * ab.e_charge / (2 * ab.mass) * ab.lam * np.kron(g.alpha[0], I2),
        (0, 0, 1, 0): 1j * ab.kappa * ab.e_charge / (2 * ab.mass) * ab.lam * np.kron(g.alpha[1], I2),
    })
    res = (it_ab.total - want).max_abs()
    rep.check_le("Abelian sigma.F == i (kappa e/2m) lambda alpha.x", res, ORACLE_TOL)
    rep.finding("Abelian sigma.F: momentum-form coefficient", 0.0, note="contraction carries alpha.x, not alpha.p")

    # momentum shifts
    lam_do = 2 * p.mass**2 * p.omega / (p.kappa * p.e_charge)
    do = replace(p, lam=lam_do)
    deltas = nonminimal_substitution(nb_field_tensor(do, cs), g, do, drop_eta_squared=True)
    mw = p.mass * p.omega
    worst = 0.0
    for i in range(2):
        e = [0, 0, 0, 0]
        e[i + 1] = 1
        worst = max(worst, max_abs(deltas[i].coefficient(e) - np.kron(-1j * mw * g.beta, I2)))
    rep.check_le("Delta_i position part == -i m omega beta x_i", worst, ORACLE_TOL)

    full = nonminimal_substitution(nb_field_tensor(do, cs), g, do, drop_eta_squared=False)
    lhs = interaction_term(nb_field_tensor(do, cs), g, do.moment_prefactor).total.left(np.kron(g.beta, I2))
    rhs = OperatorPoly()
    for i in range(3):
        rhs = rhs + full[i].left(np.kron(g.alpha[i], I2))
    rep.check_le("sum_i alpha_i Delta_i == beta * interaction", (lhs - rhs).max_abs(), ORACLE_TOL)

    herm = 0.0
    for i in range(2):
        term = -1j * np.kron(g.alpha[i] @ g.beta, color_coupling(p.phi, i, cs))
        herm = max(herm, max_abs(term - term.conj().T))
    rep.check("-i alpha_i beta c_i Hermitian", herm, herm == 0.0)

    ref_do = replace(REFERENCE, lam=2 * REFERENCE.mass**2 * REFERENCE.omega / (REFERENCE.kappa * REFERENCE.e_charge))
    rd = nonminimal_substitution(nb_field_tensor(ref_do, cs), g, ref_do, drop_eta_squared=True)
    mw_ref = ref_do.mass * ref_do.omega
    reference = np.concatenate([
        np.kron(-1j * mw_ref * ref_do.eta * g.beta, color_coupling(ref_do.phi, i, cs)).ravel() for i in range(2)
    ])
    got = np.concatenate([rd[i].constant().ravel() for i in range(2)])
    rep.finding("color momentum shift: direct / reference (-i m omega eta beta c_i)", _ratio(got, reference),
                note="reference form has coefficient -1; its variant has +1")
    return rep


def field_components(p, cs):
    """Nonzero tensor components for reporting: (mu, nu) -> (abelian text, color text)."""
    f = nb_field_tensor(p, cs)
    out = {}
    for mu in range(3):
        for nu in range(mu + 1, 3):
            out[f"F_{mu}{nu}"] = {"abelian": str(f.abelian[mu][nu]), "color": render_color(f.color[mu, nu])}
    return out

