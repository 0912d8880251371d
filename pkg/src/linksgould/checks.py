"""Exact algebraic identities of the crossing and cap/cup matrices."""
from __future__ import annotations

from .rmatrix import build_caps_cups, build_sigma, build_sigma_inv
from .ring import mono
from .tensor import ContractionNetwork, Tensor, contract


def yang_baxter_holds() -> bool:
    s, eye = build_sigma(), Tensor.identity(1)
    a, b = s.kron(eye), eye.kron(s)
    return a @ b @ a == b @ a @ b


def skein_identity_holds() -> bool:
    """q^-1 s^3 + (q^-1 - p^-2 q^-1 - p^2 q) s^2 + (q - p^-2 q^-1 - p^2 q) s + q I = 0."""
    s = build_sigma()
    s2 = s @ s
    s3 = s2 @ s
    c3 = mono(-1, 0)
    c2 = mono(-1, 0) - mono(-1, -2) - mono(1, 2)
    c1 = mono(1, 0) - mono(-1, -2) - mono(1, 2)
    c0 = mono(1, 0)
    total = s3.scale(c3) + s2.scale(c2) + s.scale(c1) + Tensor.identity(2).scale(c0)
    return not total.data


def inverse_holds() -> bool:
    s, si, eye = build_sigma(), build_sigma_inv(), Tensor.identity(2)
    return s @ si == eye and si @ s == eye


def caps_cups_inverse_holds() -> bool:
    cc = build_caps_cups()
    ok = True
    for cap, cup in ((cc.omega_minus, cc.mho_minus), (cc.omega_plus, cc.mho_plus)):
        net = ContractionNetwork(upper="c", lower="a")
        net.add(cap, "", "ab").add(cup, "bc", "")
        ok = ok and contract(net) == Tensor.identity(1)
    return ok


def loop_removal_holds() -> bool:
    """A positive kink closed with the cap/cup pair is the bare strand."""
    cc = build_caps_cups()
    net = ContractionNetwork(upper="y", lower="x")
    net.add(build_sigma(), "ya", "xb").add(cc.omega_plus, "", "ac").add(cc.mho_minus, "bc", "")
    return contract(net) == Tensor.identity(1)


IDENTITIES = {
    "yang-baxter": yang_baxter_holds,
    "cubic skein": skein_identity_holds,
    "sigma inverse": inverse_holds,
    "cap/cup inverse": caps_cups_inverse_holds,
    "loop removal": loop_removal_holds,
}
