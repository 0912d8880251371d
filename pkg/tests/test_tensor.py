import itertools
import random

import pytest
from hypothesis import given, strategies as st

from linksgould import auxiliary as aux
from linksgould import catalog
from linksgould.rmatrix import build_caps_cups, build_sigma, build_sigma_inv
from linksgould.ring import ONE, RingElem, Y, mono
from linksgould.tensor import ContractionNetwork, MalformedNetwork, Tensor, contract

S, SI = build_sigma(), build_sigma_inv()
CC = build_caps_cups()
I16 = Tensor.identity(2)


def _turnback(cup: Tensor, cap: Tensor) -> Tensor:
    net = ContractionNetwork(upper="ac", lower="bd")
    net.add(cup, "ac", "").add(cap, "", "bd")
    return contract(net)


def _half_turn(x: Tensor, cups, caps) -> Tensor:
    net = ContractionNetwork(upper="ac", lower="bd")
    net.add(x, "eg", "fh")
    net.add(cups[0], "ah", "").add(caps[0], "", "gb")
    net.add(cups[1], "cf", "").add(caps[1], "", "ed")
    return contract(net)


def test_loop_removal():
    net = ContractionNetwork(upper="y", lower="x")
    net.add(S, "ya", "xb").add(CC.omega_plus, "", "ac").add(CC.mho_minus, "bc", "")
    assert contract(net) == Tensor.identity(1)


def test_cap_cup_inverse():
    net = ContractionNetwork(upper="c", lower="a")
    net.add(CC.omega_minus, "", "ab").add(CC.mho_minus, "bc", "")
    assert contract(net) == Tensor.identity(1)


def test_supertrace_of_cup_vanishes():
    net = ContractionNetwork(upper="y", lower="x")
    net.add(I16, "ya", "xb").add(CC.mho_minus, "bc", "").add(CC.omega_plus, "", "ac")
    assert contract(net) == Tensor(1, 1, {})


def test_twist_right_elegant_form():
    for x in (S, SI):
        xr = aux.twist_right(x)
        for a, b, c, d in itertools.product(range(4), repeat=4):
            assert xr[(a, c, b, d)] == x[(c, d, a, b)]


@pytest.mark.parametrize("x", [S, SI], ids=["sigma", "sigma_inv"])
def test_twist_down_is_involution(x):
    assert aux.twist_down(aux.twist_down(x)) == x


@pytest.mark.parametrize("x", [S, SI], ids=["sigma", "sigma_inv"])
def test_twist_left_can_be_undone(x):
    net = ContractionNetwork(upper="ea", lower="dh")
    net.add(aux.twist_left(x), "ac", "bd").add(CC.mho_minus, "eb", "").add(CC.omega_minus, "", "ch")
    assert contract(net) == x


def test_twisted_crossings_cancel():
    assert aux.twist_right(S) @ aux.twist_left(SI) == I16
    assert aux.twist_left(S) @ aux.twist_right(SI) == I16


def test_twist_right_carries_y():
    assert not aux.twist_right(S).is_y_free()


def test_power_examples():
    assert aux.power(S, 1) == S
    assert aux.power(S, 2) @ aux.power(SI, 2) == I16
    with pytest.raises(ValueError):
        aux.power(S, 0)


def test_power_three_from_skein():
    s2, s3 = aux.power(S, 2), aux.power(S, 3)
    c2 = mono(0, -2) + mono(2, 2) - ONE
    c1 = mono(0, -2) + mono(2, 2) - mono(2, 0)
    assert s3 == s2.scale(c2) + S.scale(c1) - I16.scale(mono(2, 0))


@given(st.integers(1, 4), st.integers(1, 4))
def test_power_adds(m, n):
    assert aux.power(S, m + n) == aux.stack(aux.power(S, m), aux.power(S, n))


def test_rotation_identities():
    # the left/right twisted stacks are the bent clasps, closed with a cup and a cap
    for x in (S, SI):
        net = ContractionNetwork(upper="ac", lower="bd")
        net.add(aux.compose_xd_x(x), "ea", "dh").add(CC.mho_minus, "hc", "").add(CC.omega_plus, "", "be")
        assert contract(net) == aux.compose_xl_xr(x)
        net = ContractionNetwork(upper="ac", lower="bd")
        net.add(aux.compose_x_xd(x), "ea", "dh").add(CC.mho_plus, "hc", "").add(CC.omega_minus, "", "be")
        assert contract(net) == aux.compose_xr_xl(x)


def test_rotation_identity_needs_signed_cup():
    net = ContractionNetwork(upper="ac", lower="bd")
    net.add(aux.compose_xd_x(S), "ea", "dh").add(CC.mho_plus, "hc", "").add(CC.omega_plus, "", "be")
    assert contract(net) != aux.compose_xl_xr(S)


def test_reidemeister_two_across_bend():
    assert aux.compose_xd_x(S, right=SI) == _turnback(CC.mho_plus, CC.omega_minus)
    assert aux.compose_xd_x(SI, right=S) == _turnback(CC.mho_plus, CC.omega_minus)
    assert aux.compose_x_xd(S, right=SI) == _turnback(CC.mho_minus, CC.omega_plus)
    assert aux.compose_x_xd(SI, right=S) == _turnback(CC.mho_minus, CC.omega_plus)


def test_clasps_are_half_turn_symmetric():
    for x in (S, SI):
        xdx = aux.compose_xd_x(x)
        assert _half_turn(xdx, (CC.mho_plus, CC.mho_minus), (CC.omega_plus, CC.omega_minus)) == xdx
        assert _half_turn(xdx, (CC.mho_minus, CC.mho_plus), (CC.omega_minus, CC.omega_plus)) == xdx
        assert xdx != aux.compose_x_xd(x)


def test_clasp_entries_are_y_linear():
    t = aux.compose_xd_x(S)
    assert t.data and all(isinstance(v, RingElem) for v in t.data.values())
    assert not t.is_y_free()


def test_twisted_stacks_invert():
    assert aux.compose_xl_xr(S) @ aux.compose_xl_xr(SI) == I16
    assert aux.compose_xr_xl(S) @ aux.compose_xr_xl(SI) == I16


def test_towers():
    assert aux.tower_rlr(S, 1) == aux.twist_right(S)
    assert aux.tower_rlr(S, 3) == aux.twist_right(S) @ aux.twist_left(S) @ aux.twist_right(S)
    assert aux.tower_rlr(S, 3) @ aux.tower_lrl(SI, 3) == I16
    assert aux.tower_rlr(S, 5) @ aux.tower_lrl(SI, 5) == I16
    for bad in (0, 2, 4, -1):
        with pytest.raises(aux.EvenHeight):
            aux.tower_rlr(S, bad)


@pytest.mark.parametrize("name", ["4_1", "5^2_1", "9_42", "KT"])
def test_schedule_independence(name):
    net = catalog.get(name).network()
    reference = contract(net)
    for seed in range(3):
        assert contract(net, rng=random.Random(seed)) == reference


def test_subtensor_schedule_independence():
    net = ContractionNetwork(upper="bdf", lower="xij")
    net.add(SI, "df", "kl").add(S, "bk", "mn").add(SI, "nl", "oj").add(S, "mo", "xi")
    ref = contract(net)
    assert all(contract(net, rng=random.Random(k)) == ref for k in range(5))


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 3))
def test_multilinear(eq, ep, which):
    scalar = mono(eq, ep, 2) + Y
    parts = [(S, "ya", "xb"), (CC.omega_plus, "", "ac"), (CC.mho_minus, "bc", ""), (I16, "zu", "yv")]

    def build(k):
        net = ContractionNetwork(upper="zu", lower="xv")
        for i, (t, up, low) in enumerate(parts):
            net.add(t.scale(scalar) if i == k else t, up, low)
        return contract(net)

    assert build(which) == build(-1).scale(scalar)


def test_malformed_networks():
    net = ContractionNetwork(upper="y", lower="x").add(S, "ya", "xb")
    with pytest.raises(MalformedNetwork):
        contract(net)
    net = ContractionNetwork(upper="y", lower="x")
    net.add(S, "ya", "xa").add(SI, "ab", "cd")
    with pytest.raises(MalformedNetwork):
        contract(net)
    net = ContractionNetwork(upper="yc", lower="xd")
    net.add(S, "ya", "xb").add(S, "ab", "cd")
    with pytest.raises(MalformedNetwork, match="two upper"):
        contract(net)
    net = ContractionNetwork(upper="x", lower="y").add(Tensor.identity(1), "y", "x")
    with pytest.raises(MalformedNetwork, match="wrong slot"):
        contract(net)
    with pytest.raises(MalformedNetwork):
        ContractionNetwork().add(S, "ab", "c")
    with pytest.raises(MalformedNetwork):
        contract(ContractionNetwork())


def test_cap_joins_two_lower_slots():
    # caps and cups legitimately bend an index between two lower or two upper slots
    net = ContractionNetwork(upper="y", lower="x")
    net.add(S, "ya", "xb").add(CC.omega_plus, "", "ac").add(CC.mho_minus, "bc", "")
    net.validate()


def test_stack_and_kron_shapes():
    big = S.kron(Tensor.identity(1))
    assert (big.n_up, big.n_low) == (3, 3)
    assert Tensor.identity(3) @ big == big
    with pytest.raises(ValueError):
        S @ big
