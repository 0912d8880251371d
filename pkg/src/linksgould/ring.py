"""Exact arithmetic in Z[q^±1, p^±1] and its quadratic extension by Y.

Here ``p`` stands for ``q**alpha``, so every exponent is an ordinary integer.
``Y`` is the square root of ``p^-2 - q^2 + p^2 q^2 - 1``; products are reduced
on the spot so a :class:`RingElem` is always ``even + odd * Y``.
"""
from __future__ import annotations

import enum
import re
from typing import Iterable, Mapping, Union

# Exponent pairs are packed into one int so that multiplying monomials is a
# single integer addition. |e_p| must stay below 2**31.
_SHIFT = 1 << 32
_HALF = 1 << 31


def _pack(eq: int, ep: int) -> int:
    return eq * _SHIFT + ep


def _unpack(key: int) -> tuple[int, int]:
    ep = ((key + _HALF) % _SHIFT) - _HALF
    return (key - ep) // _SHIFT, ep


class NotYFree(ValueError):
    """Raised when an operation needs a Y-free value but got a Y component."""


class Substitution(enum.Enum):
    """The two exponent rewrites that act on invariant values."""

    #: q -> 1/q, p -> 1/p (mirror image of the link)
    MIRROR = "mirror"
    #: p -> 1/(q p), q fixed (orientation reversal)
    INVERSE = "inverse"


class LaurentPoly:
    """Sparse Laurent polynomial in ``q`` and ``p`` with integer coefficients.

    Values are immutable. Construct from a mapping ``{(e_q, e_p): coeff}``.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        t: dict[int, int] = {}
        if terms:
            for (eq, ep), c in terms.items():
                if c:
                    k = _pack(eq, ep)
                    t[k] = t.get(k, 0) + int(c)
            t = {k: c for k, c in t.items() if c}
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, packed: dict[int, int]) -> LaurentPoly:
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._t = packed
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, eq: int = 0, ep: int = 0, coeff: int = 1) -> LaurentPoly:
        return cls._raw({_pack(eq, ep): coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls.monomial(0, 0, c)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return {_unpack(k): c for k, c in self._t.items()}

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if isinstance(other, RingElem):
            return other == self
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(other._t) > len(self._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return LaurentPoly.constant(other) - self

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({k: c * other for k, c in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._t) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((k, c),) = self._t.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly._raw({-k * -n: c ** -n})
        result = LaurentPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def substitute(self, sub: Substitution) -> LaurentPoly:
        out: dict[tuple[int, int], int] = {}
        for (eq, ep), c in self.terms.items():
            if sub is Substitution.MIRROR:
                out[(-eq, -ep)] = c
            else:
                out[(eq - ep, -ep)] = c
        return LaurentPoly(out)

    def evaluate(self, q: complex, p: complex) -> complex:
        return sum(c * q**eq * p**ep for (eq, ep), c in self.terms.items())

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """``(e_q, e_p, coeff)`` triples in canonical order."""
        return sorted((eq, ep, c) for (eq, ep), c in self.terms.items())

    def to_string(self) -> str:
        terms = self.sorted_terms()
        if not terms:
            return "0"
        parts = []
        for i, (eq, ep, c) in enumerate(terms):
            mono = " ".join(
                f"{v}^{e}" if e != 1 else v for v, e in (("p", ep), ("q", eq)) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def to_json(self) -> list[dict[str, int]]:
        return [{"eq": eq, "ep": ep, "coeff": c} for eq, ep, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, int]]) -> LaurentPoly:
        out: dict[tuple[int, int], int] = {}
        for term in data:
            key = (int(term["eq"]), int(term["ep"]))
            if key in out:
                raise ValueError(f"duplicate term q^{key[0]} p^{key[1]}")
            out[key] = int(term["coeff"])
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse text such as ``"-1 + p^-2 - q^2 + p^2 q^2"``.

        Terms are an optional integer followed by ``q``/``p`` powers; ``*``
        and ``{}`` are ignored. Repeated terms are summed.
        """
        cleaned = text.replace("{", "").replace("}", "").replace("*", " ").replace("\u2212", "-")
        pos = 0
        out: dict[tuple[int, int], int] = {}
        first = True
        while True:
            m = _TERM.match(cleaned, pos)
            if m is None or not m.group(0).strip():
                break
            sign, num, body = m.group(1), m.group(2), m.group(3)
            if not first and not sign:
                raise ValueError(f"missing operator before {m.group(0).strip()!r}")
            if not num and not body.strip():
                raise ValueError(f"dangling sign in {text!r}")
            coeff = int(num) if num else 1
            if sign == "-":
                coeff = -coeff
            eq = ep = 0
            for var, exp in _FACTOR.findall(body):
                e = int(exp.replace(" ", "")) if exp else 1
                if var == "q":
                    eq += e
                else:
                    ep += e
            out[(eq, ep)] = out.get((eq, ep), 0) + coeff
            pos = m.end()
            first = False
        if first or cleaned[pos:].strip():
            raise ValueError(f"cannot parse polynomial near {cleaned[pos:pos + 20]!r}")
        return cls(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_string()!r})"

    __str__ = to_string


_TERM = re.compile(
    r"\s*([+-]?)\s*(\d+)?\s*((?:[qp](?:\s*\^\s*-?\s*\d+)?\s*)*)")
_FACTOR = re.compile(r"([qp])\s*(?:\^\s*(-?\s*\d+))?")

ZERO_POLY = LaurentPoly()
ONE_POLY = LaurentPoly.constant(1)

#: The value of Y^2.
Y_SQUARED = LaurentPoly({(0, -2): 1, (2, 0): -1, (2, 2): 1, (0, 0): -1})

Scalar = Union["RingElem", LaurentPoly, int]


def _as_elem(x: Scalar) -> RingElem:
    if isinstance(x, RingElem):
        return x
    if isinstance(x, LaurentPoly):
        return RingElem(x)
    if isinstance(x, int):
        return RingElem(LaurentPoly.constant(x))
    raise TypeError(f"cannot coerce {type(x).__name__} to RingElem")


class RingElem:
    """``even + odd * Y`` with Laurent polynomial parts; immutable."""

    __slots__ = ("even", "odd")

    def __init__(self, even: LaurentPoly | int = ZERO_POLY, odd: LaurentPoly | int = ZERO_POLY):
        if isinstance(even, int):
            even = LaurentPoly.constant(even)
        if isinstance(odd, int):
            odd = LaurentPoly.constant(odd)
        self.even = even
        self.odd = odd

    def is_zero(self) -> bool:
        return not self.even and not self.odd

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_y_free(self) -> bool:
        return not self.odd

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = _as_elem(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.even == other.even and self.odd == other.odd

    def __hash__(self) -> int:
        return hash((self.even, self.odd))

    def __add__(self, other: Scalar) -> RingElem:
        other = _as_elem(other)
        return RingElem(self.even + other.even, self.odd + other.odd)

    __radd__ = __add__

    def __neg__(self) -> RingElem:
        return RingElem(-self.even, -self.odd)

    def __sub__(self, other: Scalar) -> RingElem:
        other = _as_elem(other)
        return RingElem(self.even - other.even, self.odd - other.odd)

    def __rsub__(self, other: Scalar) -> RingElem:
        return _as_elem(other) - self

    def __mul__(self, other: Scalar) -> RingElem:
        other = _as_elem(other)
        a0, a1, b0, b1 = self.even, self.odd, other.even, other.odd
        if not a1 and not b1:
            return RingElem(a0 * b0)
        even = a0 * b0
        if a1 and b1:
            even = even + a1 * b1 * Y_SQUARED
        odd = ZERO_POLY
        if b1:
            odd = a0 * b1
        if a1:
            odd = odd + a1 * b0
        return RingElem(even, odd)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> RingElem:
        if n < 0:
            raise ValueError("RingElem has no general inverse")
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def require_y_free(self) -> LaurentPoly:
        if self.odd:
            raise NotYFree(f"value has a nonzero Y part: {self.to_string()}")
        return self.even

    def substitute(self, sub: Substitution) -> RingElem:
        """Apply an exponent rewrite; only defined on Y-free values."""
        return RingElem(self.require_y_free().substitute(sub))

    def evaluate(self, q: complex, p: complex, y: complex | None = None) -> complex:
        value = self.even.evaluate(q, p)
        if self.odd:
            if y is None:
                y = complex(Y_SQUARED.evaluate(q, p)) ** 0.5
            value += self.odd.evaluate(q, p) * y
        return value

    def to_string(self) -> str:
        if not self.odd:
            return self.even.to_string()
        y_part = f"({self.odd.to_string()}) Y"
        if not self.even:
            return y_part
        return f"{self.even.to_string()} + {y_part}"

    def to_json(self) -> dict:
        out: dict = {"terms": self.even.to_json()}
        if self.odd:
            out["Y"] = self.odd.to_json()
        return out

    @classmethod
    def from_json(cls, data) -> RingElem:
        """Accept either a bare term list or ``{"terms": [...], "Y": [...]}``."""
        if isinstance(data, list):
            return cls(LaurentPoly.from_json(data))
        return cls(LaurentPoly.from_json(data.get("terms", [])),
                   LaurentPoly.from_json(data.get("Y", [])))

    def __repr__(self) -> str:
        return f"RingElem({self.to_string()!r})"

    __str__ = to_string


ZERO = RingElem()
ONE = RingElem(ONE_POLY)
Y = RingElem(ZERO_POLY, ONE_POLY)


def mono(eq: int = 0, ep: int = 0, coeff: int = 1) -> RingElem:
    """The ring element ``coeff * q^eq * p^ep``."""
    return RingElem(LaurentPoly.monomial(eq, ep, coeff))


def add(a: Scalar, b: Scalar) -> RingElem:
    return _as_elem(a) + _as_elem(b)


def mul(a: Scalar, b: Scalar) -> RingElem:
    return _as_elem(a) * _as_elem(b)


def substitute(a: Scalar, sub: Substitution) -> RingElem:
    return _as_elem(a).substitute(sub)


def is_palindromic(a: Scalar) -> bool:
    """True when the value is unchanged by ``q -> 1/q, p -> 1/p``."""
    a = _as_elem(a)
    return a.substitute(Substitution.MIRROR) == a


def is_inversion_symmetric(a: Scalar) -> bool:
    """True when the value is unchanged by ``p -> 1/(q p)``."""
    a = _as_elem(a)
    return a.substitute(Substitution.INVERSE) == a


def canonical_string(a: Scalar) -> str:
    return _as_elem(a).to_string()
