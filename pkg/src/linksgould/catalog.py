"""Example links: braid words, explicit (1,1)-tangle networks, and fixtures.

Networks are written with single-letter index names, so
``net.add(s3, "ya", "xb")`` reads as ``(sigma^3)^{y a}_{x b}``.
"""
from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from . import auxiliary as aux
from .rmatrix import build_caps_cups, build_sigma, build_sigma_inv
from .ring import RingElem
from .tangle import BraidWord
from .tensor import ContractionNetwork, Tensor, contract


class UnknownLink(KeyError):
    pass


class BadPretzelParams(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    writhe: int
    braid: BraidWord | None = None
    network: Callable[[], ContractionNetwork] | None = None
    expected: RingElem | None = None
    # the stored braid closes to the mirror image of the diagram behind `expected`
    braid_is_mirror: bool = False
    chiral: bool | None = None


@functools.cache
def _parts():
    s, si = build_sigma(), build_sigma_inv()
    cc = build_caps_cups()
    return s, si, cc


def _t01() -> ContractionNetwork:
    net = ContractionNetwork(upper="y", lower="x")
    return net.add(Tensor.identity(1), "y", "x")


def _loop_closure(x: Tensor) -> ContractionNetwork:
    _, _, cc = _parts()
    net = ContractionNetwork(upper="y", lower="x")
    net.add(x, "ya", "xb").add(cc.omega_plus, "", "ac").add(cc.mho_minus, "bc", "")
    return net


def _t221() -> ContractionNetwork:
    s, _, _ = _parts()
    return _loop_closure(aux.power(s, 2))


def _t31() -> ContractionNetwork:
    s, _, _ = _parts()
    return _loop_closure(aux.power(s, 3))


def _t41() -> ContractionNetwork:
    s, si, cc = _parts()
    net = ContractionNetwork(upper="y", lower="x")
    net.add(aux.compose_xl_xr(si), "yb", "ac")
    net.add(aux.twist_right(s), "ce", "df")
    net.add(s, "ad", "xg")
    net.add(cc.omega_minus, "", "be").add(cc.mho_minus, "gf", "")
    return net


def whitehead_w() -> Tensor:
    s, si, cc = _parts()
    net = ContractionNetwork(upper="ci", lower="xd")
    net.add(aux.power(si, 2), "ce", "xf")
    net.add(aux.power(aux.twist_down(s), 2), "gi", "hd")
    net.add(cc.omega_plus, "", "eg").add(cc.mho_minus, "fh", "")
    return contract(net)


def _t521() -> ContractionNetwork:
    s, _, cc = _parts()
    net = ContractionNetwork(upper="y", lower="x")
    net.add(whitehead_w(), "ci", "xd")
    net.add(aux.compose_xr_xl(s), "ay", "ib")
    net.add(cc.omega_plus, "", "ca").add(cc.mho_plus, "db", "")
    return net


def eight17_ea() -> Tensor:
    s, si, _ = _parts()
    net = ContractionNetwork(upper="yce", lower="bdf")
    net.add(aux.power(si, 2), "ce", "gf").add(aux.power(s, 2), "yg", "bd")
    return contract(net)


def eight17_ec() -> Tensor:
    s, si, _ = _parts()
    net = ContractionNetwork(upper="bdf", lower="mnl")
    net.add(si, "df", "kl").add(s, "bk", "mn")
    return contract(net)


def eight17_ed() -> Tensor:
    s, si, _ = _parts()
    net = ContractionNetwork(upper="mnl", lower="xij")
    net.add(si, "nl", "oj").add(s, "mo", "xi")
    return contract(net)


def eight17_eb() -> Tensor:
    net = ContractionNetwork(upper="bdf", lower="xij")
    net.add(eight17_ec(), "bdf", "mnl").add(eight17_ed(), "mnl", "xij")
    return contract(net)


def eight17_eb_direct() -> Tensor:
    """EB contracted in one go from its four crossings."""
    s, si, _ = _parts()
    net = ContractionNetwork(upper="bdf", lower="xij")
    net.add(si, "df", "kl").add(s, "bk", "mn").add(si, "nl", "oj").add(s, "mo", "xi")
    return contract(net)


def _t817() -> ContractionNetwork:
    _, _, cc = _parts()
    net = ContractionNetwork(upper="y", lower="x")
    net.add(eight17_ea(), "yce", "bdf").add(eight17_eb(), "bdf", "xij")
    net.add(cc.omega_plus, "", "cr").add(cc.mho_minus, "ir", "")
    net.add(cc.omega_plus, "", "eq").add(cc.mho_minus, "jq", "")
    return net


def nine42_n() -> Tensor:
    s, si, cc = _parts()
    net = ContractionNetwork(upper="ay", lower="bh")
    net.add(aux.power(aux.twist_down(s), 2), "ac", "bd")
    net.add(aux.power(si, 3), "ey", "fh")
    net.add(cc.omega_minus, "", "ce").add(cc.mho_plus, "df", "")
    return contract(net)


def _t942() -> ContractionNetwork:
    s, si, cc = _parts()
    net = ContractionNetwork(upper="y", lower="x")
    net.add(nine42_n(), "ay", "bh")
    net.add(aux.compose_xd_x(si), "bh", "ij")
    net.add(aux.compose_x_xd(s), "ki", "xm")
    net.add(cc.mho_plus, "mj", "").add(cc.omega_plus, "", "ka")
    return net


def _t1048() -> ContractionNetwork:
    s, si, cc = _parts()
    net = ContractionNetwork(upper="y", lower="x")
    net.add(aux.power(si, 2), "ay", "bf")
    net.add(aux.power(s, 4), "fg", "dh")
    net.add(aux.power(si, 3), "bd", "ce")
    net.add(s, "eh", "xi")
    net.add(cc.omega_minus, "", "ja").add(cc.mho_plus, "jc", "")
    net.add(cc.omega_plus, "", "gk").add(cc.mho_minus, "ik", "")
    return net


def kt_a() -> Tensor:
    s, si, cc = _parts()
    net = ContractionNetwork(upper="ab", lower="qc")
    net.add(aux.compose_x_xd(s), "ab", "de")
    net.add(aux.power(si, 2), "df", "qg")
    net.add(aux.twist_down(si), "he", "ic")
    net.add(cc.omega_plus, "", "fh").add(cc.mho_minus, "gi", "")
    return contract(net)


def kt_a_prime() -> Tensor:
    s, si, cc = _parts()
    net = ContractionNetwork(upper="ab", lower="qc")
    net.add(aux.power(si, 2), "af", "dg")
    net.add(aux.twist_down(si), "hb", "ie")
    net.add(aux.compose_x_xd(s), "de", "qc")
    net.add(cc.omega_plus, "", "fh").add(cc.mho_minus, "gi", "")
    return contract(net)


def kt_b() -> Tensor:
    s, si, cc = _parts()
    net = ContractionNetwork(upper="df", lower="eg")
    net.add(s, "db", "ac")
    net.add(aux.power(aux.twist_down(s), 2), "lf", "mn")
    net.add(aux.compose_x_xd(si), "an", "eg")
    net.add(cc.omega_plus, "", "bl").add(cc.mho_minus, "cm", "")
    return contract(net)


def kt_c() -> Tensor:
    _, si, cc = _parts()
    net = ContractionNetwork(upper="dj", lower="ek")
    net.add(kt_b(), "df", "eg")
    net.add(aux.compose_xl_xr(si), "hj", "ik")
    net.add(cc.omega_minus, "", "fh").add(cc.mho_plus, "gi", "")
    return contract(net)


def _kt_network(a_part: Tensor) -> ContractionNetwork:
    _, _, cc = _parts()
    net = ContractionNetwork(upper="y", lower="x")
    net.add(a_part, "ab", "xc").add(kt_c(), "dj", "ek")
    net.add(cc.omega_minus, "", "bd").add(cc.mho_plus, "ce", "")
    net.add(cc.omega_plus, "", "aj").add(cc.mho_plus, "ky", "")
    return net


def kt_pair() -> tuple[ContractionNetwork, ContractionNetwork]:
    """Networks for the Kinoshita-Terasaka knot and its mutant (Conway knot)."""
    return _kt_network(kt_a()), _kt_network(kt_a_prime())


def pretzel(p: int, q: int, r: int) -> ContractionNetwork:
    """Trotter pretzel knot ``(p, q, r)``: three towers of negative crossings."""
    params = (p, q, r)
    if any(not isinstance(n, int) or n <= 1 or n % 2 == 0 for n in params):
        raise BadPretzelParams(f"pretzel parameters must be odd integers > 1, got {params}")
    if len(set(params)) != 3:
        raise BadPretzelParams(f"pretzel parameters must be distinct, got {params}")
    _, si, cc = _parts()
    net = ContractionNetwork(upper="y", lower="x")
    net.add(aux.tower_rlr(si, p), "ac", "xd")
    net.add(aux.tower_rlr(si, q), "eg", "fh")
    net.add(aux.tower_rlr(si, r), "ik", "jl")
    net.add(cc.omega_minus, "", "ak").add(cc.omega_plus, "", "ce").add(cc.omega_plus, "", "gi")
    net.add(cc.mho_plus, "df", "").add(cc.mho_plus, "hj", "").add(cc.mho_plus, "ly", "")
    return net


@functools.cache
def load_fixtures() -> dict[str, dict]:
    """Fixture records keyed by link name."""
    text = resources.files("linksgould").joinpath("data/fixtures.json").read_text()
    return {rec["name"]: rec for rec in json.loads(text)}


def _expected(name: str) -> RingElem | None:
    rec = load_fixtures().get(name)
    return None if rec is None else RingElem.from_json(rec["expected"])


_NETWORKS = {
    "0_1": _t01,
    "2^2_1": _t221,
    "3_1": _t31,
    "4_1": _t41,
    "5^2_1": _t521,
    "8_17": _t817,
    "9_42": _t942,
    "10_48": _t1048,
    "KT": lambda: kt_pair()[0],
    "KT'": lambda: kt_pair()[1],
}

_META = {
    # name: (writhe, chiral)
    "0_1": (0, False),
    "2^2_1": (2, False),
    "3_1": (3, True),
    "4_1": (0, False),
    "5^2_1": (1, True),
    "8_17": (0, False),
    "9_42": (1, True),
    "10_48": (0, True),
    "KT": (0, True),
    "KT'": (0, True),
}

_ALIASES = {
    "0₁": "0_1", "2²₁": "2^2_1", "3₁": "3_1", "4₁": "4_1", "5²₁": "5^2_1",
    "8₁₇": "8_17", "9₄₂": "9_42", "10₄₈": "10_48",
    "2_1^2": "2^2_1", "5_1^2": "5^2_1", "KT'": "KT'", "KTprime": "KT'",
}

NAMES = tuple(_NETWORKS)


def canonical_name(name: str) -> str:
    name = name.strip()
    name = _ALIASES.get(name, name)
    if name not in _NETWORKS:
        raise UnknownLink(name)
    return name


def get(name: str) -> CatalogEntry:
    name = canonical_name(name)
    rec = load_fixtures().get(name, {})
    braid = BraidWord.parse(rec["braid"]) if rec.get("braid") else None
    writhe, chiral = _META[name]
    return CatalogEntry(
        name=name,
        writhe=writhe,
        braid=braid,
        network=_NETWORKS[name],
        expected=_expected(name),
        braid_is_mirror=bool(rec.get("braid_is_mirror", False)),
        chiral=chiral,
    )
