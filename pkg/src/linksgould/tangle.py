"""Braid words, their evaluation on V^(x)n, and closure to a (1,1)-tangle."""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .rmatrix import build_caps_cups, build_sigma, build_sigma_inv
from .ring import ZERO, LaurentPoly, RingElem, Y_SQUARED, is_palindromic
from .tensor import DIM, ContractionNetwork, Tensor, contract

MAX_STRANDS = 5


class BraidParseError(ValueError):
    """Malformed braid word text; the message names the offending token."""


class TooManyStrands(ValueError):
    pass


class NotScalarMultiple(ArithmeticError):
    """A (1,1)-tangle tensor that is not a multiple of the identity."""


class Chirality(Enum):
    CHIRAL = "chiral"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class BraidWord:
    """Generators ``±i`` (``1 <= i < strands``), read bottom to top."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise BraidParseError(f"need at least one strand, got {self.strands}")
        for g in self.letters:
            if g == 0 or abs(g) >= self.strands:
                raise BraidParseError(
                    f"generator {g} out of range for {self.strands} strands")

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        """Parse ``"n=3; 1 -2 1 -2"``; the header is optional."""
        text = text.strip()
        strands = None
        m = re.match(r"^n\s*=\s*(\S+?)\s*(?:;|$)", text)
        if m:
            try:
                strands = int(m.group(1))
            except ValueError:
                raise BraidParseError(f"bad strand count {m.group(1)!r}") from None
            text = text[m.end():]
        letters = []
        for tok in text.replace(",", " ").split():
            try:
                letters.append(int(tok))
            except ValueError:
                raise BraidParseError(f"bad generator token {tok!r}") from None
        if strands is None:
            strands = max((abs(g) for g in letters), default=0) + 1
        return cls(strands, tuple(letters))

    def __str__(self) -> str:
        return f"n={self.strands}; " + " ".join(str(g) for g in self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return BraidWord(max(self.strands, other.strands), self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))


def reflect(w: BraidWord) -> BraidWord:
    """Mirror image: every crossing changes sign."""
    return BraidWord(w.strands, tuple(-g for g in w.letters))


@dataclass(frozen=True)
class TangleValue:
    scalar: RingElem
    raw: Tensor


def _crossing_maps():
    """For sigma and sigma^-1: ``(b, d) -> [(a, c, terms)]``.

    ``terms[i][j]`` lists the ``(packed key, coeff)`` pairs that carry parity
    ``i`` (0 for the even part, 1 for the ``Y`` part) to parity ``j``; the
    odd-to-even block already contains the ``Y^2`` reduction.
    """
    maps = []
    for t in (build_sigma(), build_sigma_inv()):
        m: dict[tuple[int, int], list] = {}
        for (a, c, b, d), v in t.data.items():
            even = list(v.even._t.items())
            odd = list(v.odd._t.items())
            odd_sq = list((v.odd * Y_SQUARED)._t.items())
            m.setdefault((b, d), []).append((a, c, ((even, odd), (odd_sq, even))))
        maps.append(m)
    return maps


def _apply_flat(state: tuple[int, ...], letters, maps) -> dict[tuple[int, ...], tuple[dict, dict]]:
    """Apply the word to one basis state; values are ``(even, odd)`` dicts of packed terms."""
    vec: dict[tuple[int, ...], tuple[dict, dict]] = {state: ({0: 1}, {})}
    for g in letters:
        m = maps[0] if g > 0 else maps[1]
        i = abs(g) - 1
        out: dict[tuple[int, ...], tuple[dict, dict]] = {}
        for s, parts in vec.items():
            head, tail = s[:i], s[i + 2:]
            for a, c, blocks in m.get((s[i], s[i + 1]), ()):
                ns = head + (a, c) + tail
                target = out.get(ns)
                if target is None:
                    target = out[ns] = ({}, {})
                for src, row in zip(parts, blocks):
                    if not src:
                        continue
                    for dst, terms in zip(target, row):
                        get = dst.get
                        for k, x in terms:
                            for key, coeff in src.items():
                                nk = key + k
                                dst[nk] = get(nk, 0) + coeff * x
        vec = {}
        for ns, (e, o) in out.items():
            e = {k: c for k, c in e.items() if c}
            o = {k: c for k, c in o.items() if c}
            if e or o:
                vec[ns] = (e, o)
    return vec


def _apply_word(state: tuple[int, ...], letters, maps) -> dict[tuple[int, ...], RingElem]:
    return {s: RingElem(LaurentPoly._raw(e), LaurentPoly._raw(o))
            for s, (e, o) in _apply_flat(state, letters, maps).items()}


def eval_braid(w: BraidWord, max_strands: int = MAX_STRANDS) -> Tensor:
    """The braid as an operator with ``n`` upper and ``n`` lower slots.

    The first letter acts first (bottom of the diagram).
    """
    n = w.strands
    if n > max_strands:
        raise TooManyStrands(f"{n} strands exceeds the limit of {max_strands}")
    maps = _crossing_maps()
    data: dict[tuple[int, ...], RingElem] = {}
    for col in _states(n):
        for row, v in _apply_word(col, w.letters, maps).items():
            data[row + col] = v
    return Tensor(n, n, data)


def _states(n: int):
    if n == 0:
        yield ()
        return
    for rest in _states(n - 1):
        for i in range(DIM):
            yield (i,) + rest


def close_to_tangle(m: Tensor, n: int | None = None) -> TangleValue:
    """Close strands ``2..n`` with the cup weights, leaving strand 1 open."""
    n = m.n_up if n is None else n
    if (m.n_up, m.n_low) != (n, n):
        raise ValueError(f"expected a {n}-strand operator")
    weights = [build_caps_cups().mho_minus[(i, i)] for i in range(DIM)]
    acc: dict[tuple[int, int], RingElem] = {}
    for key, v in m.data.items():
        up, low = key[:n], key[n:]
        if up[1:] != low[1:]:
            continue
        for a in up[1:]:
            v = v * weights[a]
        k = (up[0], low[0])
        acc[k] = acc.get(k, ZERO) + v
    raw = Tensor(1, 1, acc)
    return TangleValue(_extract_scalar(raw), raw)


def _extract_scalar(raw: Tensor) -> RingElem:
    scalar = raw[(0, 0)]
    for y in range(DIM):
        for x in range(DIM):
            expect = scalar if x == y else ZERO
            if raw[(y, x)] != expect:
                raise NotScalarMultiple(
                    f"tangle entry ({y + 1},{x + 1}) is {raw[(y, x)]}, expected {expect}")
    scalar.require_y_free()
    return scalar


def braid_network(w: BraidWord) -> ContractionNetwork:
    """The closure of ``w`` as a (1,1)-tangle network.

    One crossing node per letter; strands ``2..n`` are closed through the cup
    weight, strand 1 is left open. This is the same signed partial trace as
    :func:`close_to_tangle`, but the contraction never builds the full operator.
    """
    n = w.strands
    if n > MAX_STRANDS:
        raise TooManyStrands(f"{n} strands exceeds the limit of {MAX_STRANDS}")
    s, si = build_sigma(), build_sigma_inv()
    cc = build_caps_cups()
    weight = Tensor.diagonal([cc.mho_minus[(i, i)] for i in range(DIM)])
    bottom = [f"s{j}_0" for j in range(n)]
    top = list(bottom)
    net = ContractionNetwork()
    for level, g in enumerate(w.letters, 1):
        i = abs(g) - 1
        new = (f"s{i}_{level}", f"s{i + 1}_{level}")
        net.add(s if g > 0 else si, new, (top[i], top[i + 1]))
        top[i], top[i + 1] = new
    if top[0] == bottom[0]:
        top[0] = "open"
        net.add(Tensor.identity(1), ("open",), (bottom[0],))
    net.upper, net.lower = (top[0],), (bottom[0],)
    for j in range(1, n):
        # an untouched strand becomes a closed loop with zero weight sum
        net.add(weight, (bottom[j],), (top[j],))
    return net


def lg_invariant(w: BraidWord) -> RingElem:
    """Links-Gould invariant of the closure of ``w``."""
    return lg_of_network(braid_network(w))


def lg_of_network(net: ContractionNetwork) -> RingElem:
    """Invariant of a (1,1)-tangle network with one free upper and one free lower index."""
    if len(net.upper) != 1 or len(net.lower) != 1:
        raise ValueError("a (1,1)-tangle network needs exactly one free upper and one free lower index")
    return _extract_scalar(contract(net))


def detect_chirality(value: RingElem) -> Chirality:
    value.require_y_free()
    return Chirality.INCONCLUSIVE if is_palindromic(value) else Chirality.CHIRAL
