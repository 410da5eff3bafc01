import pytest
from hypothesis import given, strategies as st

from hulthen_dirac.errors import InvalidParameterError, LabelError
from hulthen_dirac.quantum_numbers import (LETTERS, QuantumState, SpectroscopicLabel,
                                           SymmetryKind, doublet_partner, orbital_momenta,
                                           parse_label, pseudospin_doublet, radial_degree,
                                           render, state_for_degree)

kappas = st.integers(-8, 8).filter(lambda k: k != 0)
radials = st.integers(0, 5)


@pytest.mark.parametrize("kappa, expected", [(-1, (0, 1)), (2, (2, 1)), (1, (1, 0)),
                                             (-3, (2, 3)), (4, (4, 3))])
def test_orbital_momenta(kappa, expected):
    assert orbital_momenta(kappa) == expected


def test_orbital_momenta_rejects_zero():
    with pytest.raises(InvalidParameterError):
        orbital_momenta(0)
    with pytest.raises(InvalidParameterError):
        QuantumState(1, 0)
    with pytest.raises(InvalidParameterError):
        QuantumState(-1, 1)


@pytest.mark.parametrize("n, lt, expected", [
    (1, 1, ("1s_1/2", "0d_3/2")),
    (2, 2, ("2p_3/2", "1f_5/2")),
    (1, 4, ("1f_7/2", "0h_9/2")),
    (2, 3, ("2d_5/2", "1g_7/2")),
])
def test_pseudospin_doublet_labels(n, lt, expected):
    first = QuantumState(n, -lt)
    labels = doublet_partner(first, SymmetryKind.PSEUDOSPIN)
    assert tuple(str(x) for x in labels) == expected
    # the partner yields the same pair
    partner = parse_label(expected[1])
    assert tuple(str(x) for x in doublet_partner(partner, "pseudospin")) == expected


def test_doublet_partner_rejects_intruder():
    with pytest.raises(InvalidParameterError):
        doublet_partner(QuantumState(0, -1), SymmetryKind.PSEUDOSPIN)


def test_spin_doublet_labels():
    labels = doublet_partner(QuantumState(0, -2), SymmetryKind.SPIN)
    assert tuple(str(x) for x in labels) == ("0p_3/2", "0p_1/2")


@pytest.mark.parametrize("text, n, kappa", [("1s_1/2", 1, -1), ("0d_3/2", 0, 2),
                                            ("1g_9/2", 1, -5), ("2f_7/2", 2, -4),
                                            ("0q_23/2", 0, 12)])
def test_parse_label(text, n, kappa):
    assert parse_label(text) == QuantumState(n, kappa)


@pytest.mark.parametrize("text", ["1s_3/2", "1x_1/2", "s_1/2", "1s_1", "1p_5/2", "", "1j_3/2"])
def test_parse_label_rejects(text):
    with pytest.raises(LabelError):
        parse_label(text)


def test_label_invariants():
    with pytest.raises(LabelError):
        SpectroscopicLabel(0, "p", 5)
    assert str(SpectroscopicLabel(3, "d", 5)) == "3d_5/2"
    assert LETTERS == "spdfghiklmnoq"


@given(radials, kappas)
def test_label_round_trip(n, kappa):
    state = QuantumState(n, kappa)
    assert parse_label(render(state)) == state


@given(kappas)
def test_momentum_relations(kappa):
    ell, lt = orbital_momenta(kappa)
    assert ell >= 0 and lt >= 0
    two_j = 2 * abs(kappa) - 1
    assert abs(two_j - 2 * ell) == 1
    if kappa < 0:
        assert lt == ell + 1 and two_j == 2 * ell + 1
    else:
        assert lt == ell - 1 and two_j == 2 * ell - 1


@given(st.integers(1, 6), st.integers(1, 8))
def test_doublet_members_share_pseudo_momentum(n, lt):
    a, b = pseudospin_doublet(n, lt)
    assert a.ell_tilde == b.ell_tilde == lt
    assert radial_degree(a, "pseudospin") == radial_degree(b, "pseudospin")


@given(st.integers(0, 6), kappas, st.sampled_from(list(SymmetryKind)))
def test_degree_inverse(n, kappa, sym):
    state = state_for_degree(n, kappa, sym)
    assert radial_degree(state, sym) == n
