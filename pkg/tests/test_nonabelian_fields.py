import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nadosc.clifford import I2, sigma_tensor
from nadosc.errors import InvalidInputError
from nadosc.gauge_poly import X, Y
from nadosc.linalg import SIGMA_X, SIGMA_Y, SIGMA_Z, max_abs
from nadosc.nonabelian_fields import (
    REFERENCE,
    Couplings,
    GaugeParams,
    build_extra_potentials,
    color_coupling,
    decompose_color,
    ext_field_tensor,
    ext_field_tensor_closed,
    field_components,
    fields_report,
    interaction_term,
    nb_field_tensor,
    nonminimal_substitution,
    oracle_residuals,
    random_draws,
    render_color,
    scaling_exponents,
)


def ext(cs, **kw):
    return ext_field_tensor(build_extra_potentials(GaugeParams(**kw), cs))


def test_extra_potentials(charges):
    ep = build_extra_potentials(GaugeParams(lam=1, phi=(1, 0, 0)), charges)
    assert np.array_equal(ep.a0, -SIGMA_X)
    ep = build_extra_potentials(GaugeParams(eta=1), charges)
    assert np.array_equal(ep.ai[0], -SIGMA_Y)
    assert np.array_equal(ep.ai[1], SIGMA_X)
    ep = build_extra_potentials(GaugeParams(), charges)
    assert not ep.a0.any() and not any(a.any() for a in ep.ai)


def test_direct_field_examples(charges):
    assert np.array_equal(ext(charges, lam=1, eta=1, phi=(1, 0, 0))[0, 1], -2 * SIGMA_Z)
    assert max_abs(ext(charges, lam=2, eta=0.5, phi=(0, 0, 1))[0, 2] - 2 * SIGMA_Y) == 0
    assert np.array_equal(ext(charges, eta=1)[1, 2], -2 * SIGMA_Z)


def test_closed_form_examples(charges):
    c = ext_field_tensor_closed(GaugeParams(lam=1, eta=1, phi=(1, 0, 0)), charges)
    assert np.array_equal(c[0, 1], -2 * SIGMA_Z)
    c = ext_field_tensor_closed(GaugeParams(lam=2, eta=0.5, phi=(0, 0, 1)), charges)
    assert max_abs(c[0, 2] - 2 * SIGMA_Y) == 0
    c = ext_field_tensor_closed(GaugeParams(lam=2, phi=(0.3, 0.1, 1)), charges)
    assert not c[1:, 1:].any()


def test_plus_sign_variant_disagrees(charges):
    p = GaugeParams(eta=1)
    direct = ext_field_tensor(build_extra_potentials(p, charges))
    plus = ext_field_tensor_closed(p, charges, spatial_sign=+1)
    assert max_abs(direct[1, 2] - plus[1, 2]) == 4


def test_nb_field_tensor_examples(charges):
    f = nb_field_tensor(GaugeParams(B0=3), charges)
    assert f.abelian[1][2] == 3 and not f.color[1, 2].any()
    f = nb_field_tensor(GaugeParams(lam=1), charges)
    assert f.abelian[0][1] == X and f.abelian[0][2] == Y
    ab, col = nb_field_tensor(GaugeParams(B0=1, eta=1), charges)[1, 2]
    assert ab == 1 and np.array_equal(col, -2 * SIGMA_Z)


def test_electric_background(charges):
    f = nb_field_tensor(GaugeParams(E0=(2, -1)), charges)
    assert f.abelian[0][1] == 2 and f.abelian[0][2] == -1


def test_tensor_antisymmetric_and_hermitian(charges):
    f = nb_field_tensor(REFERENCE, charges)
    assert np.array_equal(f.color, -f.color.transpose(1, 0, 2, 3))
    for mu in range(4):
        for nu in range(4):
            assert f.abelian[mu][nu] == -f.abelian[nu][mu]
            assert max_abs(f.color[mu, nu] - f.color[mu, nu].conj().T) <= 1e-15


def test_interaction_term_abelian(gammas, charges):
    p = GaugeParams(lam=1.5, kappa=2.0, mass=0.5)
    term = interaction_term(nb_field_tensor(p, charges), gammas, p.moment_prefactor).total
    coeff = 1j * p.kappa * p.e_charge / (2 * p.mass) * p.lam
    for k, var in enumerate((1, 2)):
        assert max_abs(term.linear(var) - coeff * np.kron(gammas.alpha[k], I2)) <= 1e-15
    assert not term.constant().any()


def test_interaction_term_spatial_color(gammas, charges):
    p = GaugeParams(eta=1)
    f = nb_field_tensor(p, charges)
    term = interaction_term(f, gammas, p.moment_prefactor)
    st = sigma_tensor(gammas)
    expected = p.moment_prefactor * 2 * np.kron(st[1, 2], f.color[1, 2])
    assert max_abs(term.total.constant() - expected) <= 1e-15
    assert term.pieces["spatial_color"].max_abs() > 0
    assert term.pieces["spacetime_color"].is_zero()


def test_interaction_term_zero(gammas, charges):
    p = GaugeParams()
    assert interaction_term(nb_field_tensor(p, charges), gammas, p.moment_prefactor).total.is_zero()


def test_substitution_abelian(gammas, charges):
    m, w, kappa, e = 1.3, 0.7, 2.0, 1.0
    p = GaugeParams(lam=2 * m * m * w / (kappa * e), kappa=kappa, e_charge=e, mass=m, omega=w)
    deltas = nonminimal_substitution(nb_field_tensor(p, charges), gammas, p)
    for i in range(2):
        assert max_abs(deltas[i].linear(i + 1) - (-1j * m * w * np.kron(gammas.beta, I2))) <= 1e-14
        assert not deltas[i].constant().any()


def test_substitution_color_shift(gammas, charges):
    m, w, eta = 1.0, 1.0, 0.3
    p = GaugeParams(eta=eta, lam=2 * m * m * w, phi=(0, 0, 1), mass=m, omega=w)
    deltas = nonminimal_substitution(nb_field_tensor(p, charges), gammas, p)
    c = [color_coupling(p.phi, i, charges) for i in range(2)]
    assert np.array_equal(c[0], -SIGMA_X) and np.array_equal(c[1], -SIGMA_Y)
    for i in range(2):
        assert max_abs(deltas[i].constant() - 2j * m * w * eta * np.kron(gammas.beta, c[i])) <= 1e-15


def test_substitution_keeps_eta_squared_on_request(gammas, charges):
    p = GaugeParams(eta=1)
    f = nb_field_tensor(p, charges)
    assert nonminimal_substitution(f, gammas, p)[0].is_zero()
    assert not nonminimal_substitution(f, gammas, p, drop_eta_squared=False)[0].is_zero()


def test_substitution_zero(gammas, charges):
    p = GaugeParams()
    assert all(d.is_zero() for d in nonminimal_substitution(nb_field_tensor(p, charges), gammas, p))


def test_color_term_hermitian(gammas, charges):
    for i in range(2):
        m = -1j * np.kron(gammas.alpha[i] @ gammas.beta, color_coupling((0.3, -0.2, 0.9), i, charges))
        assert max_abs(m - m.conj().T) == 0


def test_oracle_over_random_draws(charges):
    worst = 0.0
    for eta, lam, phi in random_draws(100, seed=0):
        worst = max(worst, *oracle_residuals(Couplings(eta, lam, phi), charges))
    assert worst <= 1e-12


def test_scaling_exponents(charges):
    for eta in (0.3, 0.7):
        t, s = scaling_exponents(GaugeParams(eta=eta, lam=1.1, phi=(0.2, 0.5, -0.4)), charges)
        assert abs(t - 1) <= 1e-12 and abs(s - 2) <= 1e-12


def test_fields_report(gammas, charges):
    rep = fields_report(REFERENCE, charges, gammas)
    assert rep.passed, rep.render()
    vals = {r.name: r.residual for r in rep.findings}
    assert vals["spacetime-color term: direct / reference coefficient"] == pytest.approx(2, abs=1e-12)
    assert vals["color momentum shift: direct / reference (-i m omega eta beta c_i)"] == pytest.approx(-2, abs=1e-12)


def test_params_validation():
    for kw in ({"mass": 0}, {"omega": -1}, {"eta": -0.1}, {"phi": (1, 2)}):
        with pytest.raises(InvalidInputError):
            GaugeParams(**kw)


def test_render_color():
    m = 0.5 * I2 - 2 * SIGMA_Y + 1e-17 * SIGMA_Z
    assert decompose_color(m)[:3] == (0.5, 0.0, -2.0)
    assert render_color(m) == "0.5*I + 0*s1 + -2*s2 + 0*s3"


def test_field_components(charges):
    comps = field_components(GaugeParams(B0=3, eta=1), charges)
    assert comps["F_12"] == {"abelian": "3/1", "color": "0*I + 0*s1 + 0*s2 + -2*s3"}


@given(st.floats(-2, 2), st.floats(-2, 2), st.tuples(*[st.floats(-1, 1)] * 3))
def test_oracle_property(charges, eta, lam, phi):
    t, s = oracle_residuals(Couplings(eta, lam, phi), charges)
    assert t <= 1e-12 and s <= 1e-12
