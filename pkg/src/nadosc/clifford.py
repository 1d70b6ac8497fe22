"""Dirac matrices in the standard (Dirac) representation.

gamma^0 = diag(I, -I), gamma^k = [[0, sigma_k], [-sigma_k, 0]],
beta = gamma^0, alpha_k = gamma^0 gamma^k, Sigma_k = diag(sigma_k, sigma_k),
metric eta = diag(+1, -1, -1, -1).

All entries lie in {0, +-1, +-i}, so products and (anti)commutators of these
matrices are exact in floating point and the identity checks below compare
against exactly zero.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import PAULI, anticommutator, commutator, frozen, max_abs
from .report import CheckReport

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.flags.writeable = False

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
Z2 = np.zeros((2, 2), dtype=complex)


def levi_civita(n=3):
    """Dense rank-``n`` Levi-Civita table with integer entries."""
    eps = np.zeros((n,) * n, dtype=int)
    for perm in np.ndindex(*(n,) * n):
        if len(set(perm)) != n:
            continue
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        eps[perm] = -1 if inversions % 2 else 1
    return eps


EPS3 = levi_civita(3)


@dataclass(frozen=True)
class GammaSet:
    gamma: tuple
    beta: np.ndarray
    alpha: tuple
    sigma_big: tuple
    metric: np.ndarray = METRIC

    @classmethod
    def from_gammas(cls, gammas, sigma_big=None):
        """Derive beta and alpha from four gamma matrices.

        ``sigma_big`` defaults to ``-(i/2) eps_kij alpha_i alpha_j``.
        """
        g = tuple(frozen(x) for x in gammas)
        alpha = tuple(frozen(g[0] @ g[k]) for k in (1, 2, 3))
        if sigma_big is None:
            sigma_big = spin_from_alpha(alpha)
        return cls(g, g[0], alpha, tuple(frozen(s) for s in sigma_big))


def spin_from_alpha(alpha):
    """Sigma_k = -(i/2) eps_kij alpha_i alpha_j."""
    out = []
    for k in range(3):
        acc = np.zeros((4, 4), dtype=complex)
        for i in range(3):
            for j in range(3):
                if EPS3[k, i, j]:
                    acc += EPS3[k, i, j] * (alpha[i] @ alpha[j])
        out.append(-0.5j * acc)
    return out


def build_dirac_set():
    g0 = np.block([[I2, Z2], [Z2, -I2]])
    gk = [np.block([[Z2, s], [-s, Z2]]) for s in PAULI]
    sigma_big = [np.block([[s, Z2], [Z2, s]]) for s in PAULI]
    return GammaSet.from_gammas([g0, *gk], sigma_big=sigma_big)


@dataclass(frozen=True)
class SigmaTensor:
    components: np.ndarray  # shape (4, 4, 4, 4): [mu, nu] -> 4x4 matrix

    def __getitem__(self, idx):
        return self.components[idx]


def sigma_tensor(g):
    """sigma^{mu nu} = (i/2) [gamma^mu, gamma^nu]."""
    comps = np.zeros((4, 4, 4, 4), dtype=complex)
    for mu in range(4):
        for nu in range(4):
            comps[mu, nu] = 0.5j * commutator(g.gamma[mu], g.gamma[nu])
    comps.flags.writeable = False
    return SigmaTensor(comps)


def verify_clifford(g):
    """Residuals of {gamma^mu, gamma^nu} - 2 eta^{mu nu} I for all mu <= nu."""
    rep = CheckReport("Clifford relations")
    for mu in range(4):
        for nu in range(mu, 4):
            r = max_abs(anticommutator(g.gamma[mu], g.gamma[nu]) - 2 * g.metric[mu, nu] * I4)
            rep.check(f"{{gamma^{mu},gamma^{nu}}} = 2 eta^{mu}{nu} I", r, r == 0.0)
    return rep


def verify_gamma_set(g):
    """Derived-matrix relations: beta, alpha, Sigma, sigma^{mu nu}, Hermiticity pattern."""
    rep = CheckReport("Dirac matrix relations")

    def exact(name, m):
        r = max_abs(m)
        rep.check(name, r, r == 0.0)

    exact("beta^2 = I", g.beta @ g.beta - I4)
    for k in range(3):
        exact(f"alpha_{k + 1}^2 = I", g.alpha[k] @ g.alpha[k] - I4)
        exact(f"{{alpha_{k + 1},beta}} = 0", anticommutator(g.alpha[k], g.beta))
    for i in range(3):
        for j in range(i + 1, 3):
            exact(f"{{alpha_{i + 1},alpha_{j + 1}}} = 0", anticommutator(g.alpha[i], g.alpha[j]))
    st = sigma_tensor(g)
    for k in range(1, 4):
        exact(f"sigma^0{k} = i alpha_{k}", st[0, k] - 1j * g.alpha[k - 1])
    worst = max(max_abs(st[mu, nu] + st[nu, mu]) for mu in range(4) for nu in range(4))
    rep.check("sigma^{mu nu} = -sigma^{nu mu}", worst, worst == 0.0)
    exact("gamma^0 Hermitian", g.gamma[0] - g.gamma[0].conj().T)
    for k in range(1, 4):
        exact(f"gamma^{k} anti-Hermitian", g.gamma[k] + g.gamma[k].conj().T)
        exact(f"alpha_{k} Hermitian", g.alpha[k - 1] - g.alpha[k - 1].conj().T)
        exact(f"Sigma_{k} Hermitian", g.sigma_big[k - 1] - g.sigma_big[k - 1].conj().T)
    return rep
