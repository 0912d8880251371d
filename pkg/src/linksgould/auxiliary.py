"""Derived crossing tensors: twisted crossings, stacks, and towers.

``X`` is any channel crossing (``sigma`` or its inverse). Every builder is a
direct contraction through :func:`linksgould.tensor.contract`.
"""
from __future__ import annotations

from .rmatrix import build_caps_cups
from .tensor import ContractionNetwork, Tensor, contract


class EvenHeight(ValueError):
    """Towers of alternating twisted crossings need an odd height."""


def _cc():
    return build_caps_cups()


def stack(top: Tensor, bottom: Tensor) -> Tensor:
    """Place ``top`` above ``bottom``: ``(T B)^{a c}_{b d} = T^{a c}_{e f} B^{e f}_{b d}``."""
    return top @ bottom


def twist_left(x: Tensor) -> Tensor:
    cc = _cc()
    net = ContractionNetwork(upper="ac", lower="bd")
    net.add(x, "ea", "dh").add(cc.omega_minus, "", "be").add(cc.mho_minus, "hc", "")
    return contract(net)


def twist_right(x: Tensor) -> Tensor:
    cc = _cc()
    net = ContractionNetwork(upper="ac", lower="bd")
    net.add(x, "cg", "fb").add(cc.mho_plus, "af", "").add(cc.omega_plus, "", "gd")
    return contract(net)


def twist_down(x: Tensor) -> Tensor:
    """The crossing rotated by a half turn."""
    cc = _cc()
    net = ContractionNetwork(upper="ac", lower="bd")
    net.add(x, "eg", "fh")
    net.add(cc.mho_plus, "ah", "").add(cc.omega_plus, "", "gb")
    net.add(cc.mho_plus, "cf", "").add(cc.omega_plus, "", "ed")
    return contract(net)


def power(x: Tensor, n: int) -> Tensor:
    """``n`` copies of ``x`` stacked; ``n >= 1``."""
    if n < 1:
        raise ValueError("power needs n >= 1")
    out = x
    for _ in range(n - 1):
        out = stack(x, out)
    return out


def compose_xd_x(x: Tensor, right: Tensor | None = None) -> Tensor:
    """``X_d`` to the left of ``X``.

    ``right`` replaces the right-hand crossing; ``compose_xd_x(sigma, sigma_inv)``
    is a Reidemeister II clasp and collapses to a cup over a cap.
    """
    cc = _cc()
    net = ContractionNetwork(upper="ac", lower="bd")
    net.add(twist_down(x), "ae", "bf").add(x if right is None else right, "gc", "hd")
    net.add(cc.omega_minus, "", "eg").add(cc.mho_plus, "fh", "")
    return contract(net)


def compose_x_xd(x: Tensor, right: Tensor | None = None) -> Tensor:
    """``X`` to the left of ``X_d``; ``right`` is an upright crossing whose
    half-turn is placed on the right instead of ``x``'s."""
    cc = _cc()
    net = ContractionNetwork(upper="ac", lower="bd")
    net.add(x, "ae", "bf").add(twist_down(x if right is None else right), "gc", "hd")
    net.add(cc.omega_plus, "", "eg").add(cc.mho_minus, "fh", "")
    return contract(net)


def compose_xl_xr(x: Tensor) -> Tensor:
    return stack(twist_left(x), twist_right(x))


def compose_xr_xl(x: Tensor) -> Tensor:
    return stack(twist_right(x), twist_left(x))


def _tower(outer: Tensor, inner: Tensor, height: int) -> Tensor:
    if height < 1 or height % 2 == 0:
        raise EvenHeight(f"tower height must be odd and >= 1, got {height}")
    pair = stack(outer, inner)
    out = outer
    for _ in range(height // 2):
        out = stack(pair, out)
    return out


def tower_rlr(x: Tensor, height: int) -> Tensor:
    """Alternating stack ``X_r X_l X_r ... X_r`` of odd ``height``."""
    return _tower(twist_right(x), twist_left(x), height)


def tower_lrl(x: Tensor, height: int) -> Tensor:
    """``X_l X_r ... X_l``; ``tower_lrl(sigma_inv, n)`` inverts ``tower_rlr(sigma, n)``."""
    return _tower(twist_left(x), twist_right(x), height)
