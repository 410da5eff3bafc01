import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from hulthen_dirac.errors import NoBoundStateError, NoRealRootsError
from hulthen_dirac.model import (BOUND_BRANCH, EnergyPair, aux_combos, bound_energy,
                                 duality_map, energy_closed_form, energy_pair, nonrel_energy,
                                 nonrel_theta, select_bound_root, to_nu_problem)
from hulthen_dirac.params import REFERENCE_DELTAS, PhysicalParams, reference_params
from hulthen_dirac.quantum_numbers import QuantumState, SymmetryKind
from hulthen_dirac.reference import printed_digits_match, reference_entries

ENTRIES = reference_entries()


def radicand(params, e):
    # theta^2 written out from the two symmetry limits
    mu, c = params.mu, params.c_const
    if params.symmetry is SymmetryKind.PSEUDOSPIN:
        return mu * mu - e * e + c * (mu + e)
    return mu * mu - e * e - c * (mu - e)


def test_calibrated_branch_reproduces_reference():
    hits = {"plus": 0, "minus": 0}
    for lt, n, d, printed in ENTRIES:
        pair = energy_closed_form(reference_params(d), QuantumState(n, -lt))
        for br in hits:
            hits[br] += printed_digits_match(pair.root(br), printed)
    assert hits == {"plus": 0, "minus": 32}
    assert BOUND_BRANCH[SymmetryKind.PSEUDOSPIN] == "minus"


@pytest.mark.parametrize("lt, n, d, printed", ENTRIES)
def test_reference_entry_to_printed_precision(lt, n, d, printed):
    e = bound_energy(reference_params(d), QuantumState(n, -lt))
    assert printed_digits_match(e, printed)
    # printed to 7 decimals at most; the worst entry is off by 3.3e-6
    assert abs(e - printed) <= 5e-6


def test_nu_problem_coefficients():
    params = reference_params(0.25)
    e = -0.2346580
    prob, co = to_nu_problem(params, QuantumState(1, -1), e)
    assert co.nu_sq == pytest.approx((5 + 0.2346580 - 4.9) * 3.4 / 0.0625, rel=1e-14)
    assert co.omega_sq == pytest.approx((e * e - 25 + 4.9 * 5 + 4.9 * e) / 0.0625, rel=1e-12)
    assert co.a_coef == pytest.approx(co.omega_sq + co.nu_sq - 2, rel=1e-14)
    assert co.b_coef == pytest.approx(2 * co.omega_sq + co.nu_sq, rel=1e-14)
    assert prob.sigma == (0.0, 1.0, -1.0) and prob.tau_tilde == (1.0, -1.0)
    assert prob.sigma_tilde == (co.omega_sq, -co.b_coef, co.a_coef)
    _, zero = to_nu_problem(params.with_(strength=0.0), QuantumState(1, -1), e)
    assert zero.nu_sq == 0.0


def test_spin_coefficients_sign():
    params = PhysicalParams(5.0, 0.25, 3.4, 4.9, "spin")
    e = 0.3
    _, co = to_nu_problem(params, QuantumState(0, -2), e)
    assert co.nu_sq == pytest.approx((5 + 0.3 - 4.9) * 3.4 / 0.0625)
    assert co.a_coef == pytest.approx(co.omega_sq - co.nu_sq - 2)
    assert co.b_coef == pytest.approx(2 * co.omega_sq - co.nu_sq)


def test_aux_combos():
    params = reference_params(0.1)
    aux = aux_combos(params, 2, 3)
    assert (aux.u, aux.y) == (5 * 4 + 4, 12)
    assert aux.t == pytest.approx(24 + (-4.9 + 5) * 3.4 / 0.01)


def test_no_real_roots():
    with pytest.raises(NoRealRootsError):
        energy_pair(PhysicalParams(2.17, 0.434, 0.66, -3.2), 1, 1)


def test_no_admissible_root():
    pair = EnergyPair(SymmetryKind.PSEUDOSPIN, 0, 1, 1.0, -1.0, 0.0, 0.0, -1.0, -2.0,
                      False, False, False, False)
    with pytest.raises(NoBoundStateError):
        select_bound_root(pair, reference_params(0.1))


def test_calibrated_root_must_be_admissible():
    pair = EnergyPair(SymmetryKind.PSEUDOSPIN, 0, 1, 1.0, -1.0, 0.5, 0.0, 0.25, -2.0,
                      True, False, True, False)
    with pytest.raises(NoBoundStateError):
        select_bound_root(pair, reference_params(0.1))


def test_degenerate_doublet_partners_share_energy():
    params = reference_params(0.175)
    for lt in range(1, 5):
        a = energy_closed_form(params, QuantumState(2, -lt))
        b = energy_closed_form(params, QuantumState(1, lt + 1))
        assert (a.e_plus, a.e_minus) == (b.e_plus, b.e_minus)
    spin = PhysicalParams(5.0, 0.1, 3.4, 4.9, "spin")
    a = energy_closed_form(spin, QuantumState(1, -3))
    b = energy_closed_form(spin, QuantumState(1, 2))
    assert (a.e_plus, a.e_minus) == (b.e_plus, b.e_minus)


@pytest.mark.parametrize("lt", range(1, 5))
@pytest.mark.parametrize("n", (1, 2))
def test_energy_decreases_with_delta(lt, n):
    es = [bound_energy(reference_params(d), QuantumState(n, -lt)) for d in REFERENCE_DELTAS]
    assert all(b < a for a, b in zip(es, es[1:]))


def test_duality_involution():
    params = reference_params(0.1)
    state = QuantumState(1, -1)
    p2, s2 = duality_map(params, state)
    assert (p2.symmetry, p2.strength, p2.c_const, s2.kappa) == (SymmetryKind.SPIN, -3.4, 4.9, 1)
    assert s2.ell == 1
    assert duality_map(p2, s2) == (params, state)


def test_duality_mirrors_nu_squared():
    params = reference_params(0.25)
    state = QuantumState(1, -2)
    p2, s2 = duality_map(params, state)
    e = -0.6351320
    _, a = to_nu_problem(params, state, e)
    _, b = to_nu_problem(p2, s2, -e)
    assert b.nu_sq == pytest.approx(-a.nu_sq, rel=1e-14)
    assert b.omega_sq == pytest.approx(a.omega_sq, rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.5, 10), st.floats(0.02, 0.5), st.floats(-8, 8), st.floats(-8, 8),
       st.integers(0, 4), st.integers(1, 5), st.booleans())
def test_duality_property(mu, delta, g, c, n, lt, aligned):
    params = PhysicalParams(mu, delta, g, c)
    state = QuantumState(n + 1, -lt) if aligned else QuantumState(n, lt + 1)
    try:
        e = bound_energy(params, state)
    except (NoBoundStateError, NoRealRootsError):
        assume(False)
    p2, s2 = duality_map(params, state)
    e2 = bound_energy(p2, s2)
    assert abs(e2 + e) <= 1e-10 * max(1.0, abs(e))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(list(SymmetryKind)), st.floats(0.5, 10), st.floats(0.02, 0.5),
       st.floats(-8, 8), st.floats(-8, 8), st.integers(0, 5), st.integers(0, 5))
def test_roots_satisfy_quantization(sym, mu, delta, g, c, n, ell):
    params = PhysicalParams(mu, delta, g, c, sym)
    try:
        pair = energy_pair(params, n, ell)
    except NoRealRootsError:
        assume(False)
    aux = aux_combos(params, n, ell)
    for e in (pair.e_plus, pair.e_minus):
        # squared quantization condition (E g - delta^2 T)^2 = delta^2 Y^2 theta^2
        lhs = (e * g - delta**2 * aux.t) ** 2
        rhs = delta**2 * aux.y**2 * radicand(params, e)
        scale = max(abs(e * g) + delta**2 * abs(aux.t), 1.0) ** 2
        assert abs(lhs - rhs) <= 1e-9 * scale
    assert pair.e_plus >= pair.e_minus
    for br in ("plus", "minus"):
        th2 = radicand(params, pair.root(br))
        # the signed exponent squares to the radicand
        assert pair.theta(br) ** 2 == pytest.approx(th2, rel=1e-6, abs=1e-8 * mu * mu)
        if pair.valid(br):
            assert th2 > 0
        if pair.normalizable(br):
            assert pair.valid(br) and pair.theta(br) > 0


def test_nonrel_energy():
    assert nonrel_energy(1.0, 0.05, 0, 0) == pytest.approx(-0.5 * ((0.05 - 2) / 2) ** 2, rel=1e-15)
    for n in range(4):
        for ell in range(4):
            assert nonrel_energy(1.0, 0.1, n, ell) <= 0.0
    assert nonrel_theta(1.0, 0.05, 0, 0) == pytest.approx(math.sqrt(-2 * nonrel_energy(1.0, 0.05, 0, 0)))


@pytest.mark.parametrize("n, ell", [(0, 0), (1, 0), (0, 2), (2, 1)])
def test_nonrel_is_the_weak_binding_limit(n, ell):
    # spin symmetry with C = 0 and strength delta: E - mu -> E_nr as mu grows
    mu, delta = 50.0, 0.2
    e_nr = nonrel_energy(mu, delta, n, ell)
    e = bound_energy(PhysicalParams(mu, delta, delta, 0.0, "spin"), QuantumState(n, -(ell + 1)))
    assert e - mu == pytest.approx(e_nr, rel=5 * abs(e_nr) / mu)
