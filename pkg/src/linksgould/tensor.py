"""Sparse tensors over :class:`RingElem` and a named-index contraction engine.

A tensor with ``n_up`` upper and ``n_low`` lower slots stores its nonzero
entries in a dict keyed by ``(upper..., lower...)`` with indices in ``0..3``.
For a rank-4 tensor ``X^{a c}_{b d}`` this is the usual 16x16 matrix with row
``4a + c`` and column ``4b + d`` (0-based).
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .ring import ONE, ZERO, RingElem, Scalar, _as_elem

DIM = 4


class MalformedNetwork(ValueError):
    """A contraction network violates the index rules."""


class Tensor:
    """Immutable sparse tensor with ``n_up`` upper and ``n_low`` lower slots."""

    __slots__ = ("n_up", "n_low", "data", "capcup")

    def __init__(
        self,
        n_up: int,
        n_low: int,
        data: Mapping[tuple[int, ...], RingElem] | None = None,
        capcup: bool = False,
    ):
        self.n_up = n_up
        self.n_low = n_low
        rank = n_up + n_low
        clean = {}
        for key, val in (data or {}).items():
            if len(key) != rank:
                raise ValueError(f"key {key} does not have rank {rank}")
            val = _as_elem(val)
            if val:
                clean[tuple(key)] = val
        self.data = clean
        # cap/cup tensors may join two upper or two lower slots in a network
        self.capcup = capcup

    @property
    def rank(self) -> int:
        return self.n_up + self.n_low

    def __getitem__(self, key: tuple[int, ...]) -> RingElem:
        return self.data.get(tuple(key), ZERO)

    def entry(self, row: int, col: int) -> RingElem:
        """Matrix-view entry, 1-based as in ``A_{4(i-1)+j, 4(k-1)+l}``."""
        return self[_split(row - 1, self.n_up) + _split(col - 1, self.n_low)]

    @classmethod
    def from_entries(cls, n_up: int, n_low: int, entries: Mapping[tuple[int, int], Scalar],
                     capcup: bool = False) -> Tensor:
        """Build from 1-based ``{(row, col): value}`` matrix entries."""
        data = {
            _split(r - 1, n_up) + _split(c - 1, n_low): _as_elem(v)
            for (r, c), v in entries.items()
        }
        return cls(n_up, n_low, data, capcup=capcup)

    @classmethod
    def identity(cls, n: int = 1) -> Tensor:
        keys = itertools.product(range(DIM), repeat=n)
        return cls(n, n, {k + k: ONE for k in keys})

    @classmethod
    def diagonal(cls, values: Sequence[Scalar], *, n_up: int = 1, n_low: int = 1,
                 capcup: bool = False) -> Tensor:
        return cls(n_up, n_low, {(i, i): _as_elem(v) for i, v in enumerate(values)},
                   capcup=capcup)

    def matrix(self) -> list[list[RingElem]]:
        rows, cols = DIM**self.n_up, DIM**self.n_low
        out = [[ZERO] * cols for _ in range(rows)]
        for key, val in self.data.items():
            out[_join(key[: self.n_up])][_join(key[self.n_up:])] = val
        return out

    def map(self, fn: Callable[[RingElem], RingElem]) -> Tensor:
        return Tensor(self.n_up, self.n_low, {k: fn(v) for k, v in self.data.items()},
                      capcup=self.capcup)

    def _check_shape(self, other: Tensor) -> None:
        if (self.n_up, self.n_low) != (other.n_up, other.n_low):
            raise ValueError("tensor shapes differ")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.n_up, self.n_low) == (other.n_up, other.n_low) and self.data == other.data

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: Tensor) -> Tensor:
        self._check_shape(other)
        data = dict(self.data)
        for k, v in other.data.items():
            data[k] = data.get(k, ZERO) + v
        return Tensor(self.n_up, self.n_low, data)

    def __neg__(self) -> Tensor:
        return self.map(lambda v: -v)

    def __sub__(self, other: Tensor) -> Tensor:
        return self + (-other)

    def scale(self, s: Scalar) -> Tensor:
        s = _as_elem(s)
        return self.map(lambda v: s * v)

    def __matmul__(self, other: Tensor) -> Tensor:
        """Stack ``self`` on top of ``other``: ``(A B)^{U}_{L} = A^{U}_{M} B^{M}_{L}``."""
        if self.n_low != other.n_up:
            raise ValueError("inner slot counts differ")
        by_row: dict[tuple, list] = {}
        for k, v in other.data.items():
            by_row.setdefault(k[: other.n_up], []).append((k[other.n_up:], v))
        out: dict[tuple, RingElem] = {}
        for k, a in self.data.items():
            up, mid = k[: self.n_up], k[self.n_up:]
            for low, b in by_row.get(mid, ()):
                key = up + low
                prev = out.get(key)
                out[key] = a * b if prev is None else prev + a * b
        return Tensor(self.n_up, other.n_low, out)

    def kron(self, other: Tensor) -> Tensor:
        """Side-by-side placement: uppers ``(self, other)``, lowers likewise."""
        out = {}
        su, ou = self.n_up, other.n_up
        for ka, a in self.data.items():
            for kb, b in other.data.items():
                out[ka[:su] + kb[:ou] + ka[su:] + kb[ou:]] = a * b
        return Tensor(su + ou, self.n_low + other.n_low, out)

    def is_y_free(self) -> bool:
        return all(v.is_y_free() for v in self.data.values())

    def evaluate(self, q: float, p: float, y: complex | None = None) -> np.ndarray:
        """Numeric matrix view at the given point."""
        out = np.zeros((DIM**self.n_up, DIM**self.n_low), dtype=complex)
        for key, val in self.data.items():
            out[_join(key[: self.n_up]), _join(key[self.n_up:])] = val.evaluate(q, p, y)
        return out

    def __repr__(self) -> str:
        return f"Tensor(n_up={self.n_up}, n_low={self.n_low}, nnz={len(self.data)})"


def _split(flat: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        flat, r = divmod(flat, DIM)
        out.append(r)
    return tuple(reversed(out))


def _join(idx: Iterable[int]) -> int:
    flat = 0
    for i in idx:
        flat = flat * DIM + i
    return flat


@dataclass
class Node:
    tensor: Tensor
    upper: tuple[str, ...]
    lower: tuple[str, ...]

    @property
    def names(self) -> tuple[str, ...]:
        return self.upper + self.lower


@dataclass
class ContractionNetwork:
    """Named-index description of a tensor expression.

    Index names are strings; single-letter names may be given as one string,
    so ``net.add(sigma, "ya", "xb")`` reads as ``sigma^{y a}_{x b}``. The
    result has slots ``upper`` then ``lower``.
    """

    nodes: list[Node] = field(default_factory=list)
    upper: tuple[str, ...] = ()
    lower: tuple[str, ...] = ()

    def __post_init__(self):
        self.upper = tuple(self.upper)
        self.lower = tuple(self.lower)

    def add(self, tensor: Tensor, upper: Sequence[str] = (), lower: Sequence[str] = ()) -> ContractionNetwork:
        upper, lower = tuple(upper), tuple(lower)
        if (len(upper), len(lower)) != (tensor.n_up, tensor.n_low):
            raise MalformedNetwork(
                f"tensor with {tensor.n_up} upper/{tensor.n_low} lower slots "
                f"labelled {upper}/{lower}"
            )
        self.nodes.append(Node(tensor, upper, lower))
        return self

    def validate(self) -> None:
        slots: dict[str, list[tuple[bool, bool]]] = {}
        for node in self.nodes:
            for name in node.upper:
                slots.setdefault(name, []).append((True, node.tensor.capcup))
            for name in node.lower:
                slots.setdefault(name, []).append((False, node.tensor.capcup))
        free_up, free_low = set(self.upper), set(self.lower)
        if len(free_up | free_low) != len(self.upper) + len(self.lower):
            raise MalformedNetwork("free index declared twice")
        for name, uses in slots.items():
            if name in free_up or name in free_low:
                if len(uses) != 1:
                    raise MalformedNetwork(f"free index {name!r} appears {len(uses)} times")
                is_up, flexible = uses[0]
                if not flexible and is_up != (name in free_up):
                    raise MalformedNetwork(f"free index {name!r} sits in the wrong slot kind")
                continue
            if len(uses) != 2:
                raise MalformedNetwork(f"index {name!r} appears {len(uses)} time(s)")
            (up1, flex1), (up2, flex2) = uses
            if up1 == up2 and not (flex1 or flex2):
                kind = "upper" if up1 else "lower"
                raise MalformedNetwork(f"index {name!r} joins two {kind} slots")
        for name in free_up | free_low:
            if name not in slots:
                raise MalformedNetwork(f"free index {name!r} does not appear")


def contract(net: ContractionNetwork, rng: random.Random | None = None) -> Tensor:
    """Sum over every contracted index of ``net``.

    Pairs of nodes are merged greedily, smallest resulting rank first. Passing
    ``rng`` merges random pairs instead, which must give the same answer.
    """
    net.validate()
    work: list[tuple[tuple[str, ...], dict]] = []
    for node in net.nodes:
        work.append(_self_trace(node.names, node.tensor.data))
    if not work:
        raise MalformedNetwork("empty network")

    while len(work) > 1:
        i, j = _pick_pair(work, rng)
        b = work.pop(j)
        a = work.pop(i)
        work.insert(i, _merge(a, b))

    names, data = work[0]
    order = net.upper + net.lower
    if set(names) != set(order):
        raise MalformedNetwork(f"open indices {names} do not match declared {order}")
    perm = [names.index(n) for n in order]
    return Tensor(len(net.upper), len(net.lower),
                  {tuple(k[p] for p in perm): v for k, v in data.items()})


def _self_trace(names: tuple[str, ...], data: dict) -> tuple[tuple[str, ...], dict]:
    # a name repeated on one node is traced out directly
    seen: dict[str, int] = {}
    pairs = []
    for pos, n in enumerate(names):
        if n in seen:
            pairs.append((seen[n], pos))
        else:
            seen[n] = pos
    if not pairs:
        return names, data
    drop = {p for pair in pairs for p in pair}
    keep = [pos for pos in range(len(names)) if pos not in drop]
    out: dict[tuple, RingElem] = {}
    for k, v in data.items():
        if all(k[a] == k[b] for a, b in pairs):
            nk = tuple(k[p] for p in keep)
            out[nk] = out.get(nk, ZERO) + v
    return tuple(names[p] for p in keep), out


def _pick_pair(work, rng):
    n = len(work)
    if rng is not None:
        i, j = sorted(rng.sample(range(n), 2))
        return i, j
    best = None
    for i in range(n):
        si = set(work[i][0])
        for j in range(i + 1, n):
            sj = set(work[j][0])
            shared = si & sj
            if not shared and best is not None:
                continue
            rank = len(si ^ sj)
            score = (not shared, rank, max(len(work[i][1]), 1) * max(len(work[j][1]), 1))
            if best is None or score < best[0]:
                best = (score, i, j)
    return best[1], best[2]


def _merge(a, b):
    names_a, data_a = a
    names_b, data_b = b
    shared = [n for n in names_a if n in names_b]
    pos_a = [names_a.index(n) for n in shared]
    pos_b = [names_b.index(n) for n in shared]
    rest_a = [p for p in range(len(names_a)) if p not in pos_a]
    rest_b = [p for p in range(len(names_b)) if p not in pos_b]

    index_b: dict[tuple, list] = {}
    for k, v in data_b.items():
        index_b.setdefault(tuple(k[p] for p in pos_b), []).append((tuple(k[p] for p in rest_b), v))

    out: dict[tuple, RingElem] = {}
    for k, va in data_a.items():
        matches = index_b.get(tuple(k[p] for p in pos_a))
        if not matches:
            continue
        ka = tuple(k[p] for p in rest_a)
        for kb, vb in matches:
            key = ka + kb
            prev = out.get(key)
            prod = va * vb
            out[key] = prod if prev is None else prev + prod
    out = {k: v for k, v in out.items() if v}
    names = tuple(names_a[p] for p in rest_a) + tuple(names_b[p] for p in rest_b)
    return names, out
