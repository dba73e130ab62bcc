"""Exact coefficient arithmetic for Hecke algebras with unequal parameters.

The coefficient ring is the integral group ring Z[G] of a totally ordered
free abelian group G, written multiplicatively: an element is a finite
integer combination of symbols v^g.  Two exponent groups are supported:

* rational mode: G is a subgroup of Q with the order inherited from Q;
* lex mode: G = Z^k with the lexicographic order on a fixed coordinate
  order (models generic unequal parameters with no accidental relations).

The mode is fixed per computation; mixing modes raises ModeMismatchError.
All values are immutable and all arithmetic is exact (no floats anywhere).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Tuple, Union

RATIONAL = "rational"
LEX = "lex"

ExpValue = Union[Fraction, Tuple[int, ...]]


class ModeMismatchError(ValueError):
    """Operands live over different exponent groups (mode or lex arity)."""


def _zero_value(mode: str, arity: Optional[int]) -> ExpValue:
    if mode == RATIONAL:
        return Fraction(0)
    return (0,) * (arity or 0)


@dataclass(frozen=True)
class OrderedExponent:
    """An element g of the totally ordered exponent group G.

    ``value`` is a Fraction in rational mode, or a tuple of ints in lex
    mode (compared lexicographically, which is exactly Python's tuple
    order).  The order is total and compatible with addition, and
    negation reverses it.
    """

    mode: str
    value: ExpValue

    def __post_init__(self) -> None:
        if self.mode == RATIONAL:
            if not isinstance(self.value, Fraction):
                object.__setattr__(self, "value", Fraction(self.value))
        elif self.mode == LEX:
            if not isinstance(self.value, tuple):
                object.__setattr__(self, "value", tuple(int(x) for x in self.value))
        else:
            raise ValueError(f"unknown exponent mode {self.mode!r}")

    @property
    def arity(self) -> Optional[int]:
        return None if self.mode == RATIONAL else len(self.value)

    @staticmethod
    def rational(x) -> "OrderedExponent":
        return OrderedExponent(RATIONAL, Fraction(x))

    @staticmethod
    def lex(vec: Iterable[int]) -> "OrderedExponent":
        return OrderedExponent(LEX, tuple(int(x) for x in vec))

    @staticmethod
    def zero(mode: str, arity: Optional[int] = None) -> "OrderedExponent":
        return OrderedExponent(mode, _zero_value(mode, arity))

    def _check(self, other: "OrderedExponent") -> None:
        if self.mode != other.mode or self.arity != other.arity:
            raise ModeMismatchError(
                f"exponent groups differ: {self.mode}/{self.arity} vs "
                f"{other.mode}/{other.arity}"
            )

    def __add__(self, other: "OrderedExponent") -> "OrderedExponent":
        self._check(other)
        if self.mode == RATIONAL:
            return OrderedExponent(RATIONAL, self.value + other.value)
        return OrderedExponent(LEX, tuple(a + b for a, b in zip(self.value, other.value)))

    def __neg__(self) -> "OrderedExponent":
        if self.mode == RATIONAL:
            return OrderedExponent(RATIONAL, -self.value)
        return OrderedExponent(LEX, tuple(-a for a in self.value))

    def __sub__(self, other: "OrderedExponent") -> "OrderedExponent":
        return self + (-other)

    def __lt__(self, other: "OrderedExponent") -> bool:
        self._check(other)
        return self.value < other.value

    def __le__(self, other: "OrderedExponent") -> bool:
        self._check(other)
        return self.value <= other.value

    def sign(self) -> int:
        """-1, 0 or +1 according to the comparison with the group identity."""
        zero = _zero_value(self.mode, self.arity)
        if self.value < zero:
            return -1
        if self.value > zero:
            return 1
        return 0

    def is_zero(self) -> bool:
        return self.sign() == 0

    def render(self) -> str:
        if self.mode == RATIONAL:
            return str(self.value)
        return ",".join(str(a) for a in self.value)


def _parse_exp_value(text: str, mode: str, arity: Optional[int]) -> ExpValue:
    if mode == RATIONAL:
        return Fraction(text)
    vec = tuple(int(part) for part in text.split(","))
    if arity is not None and len(vec) != arity:
        raise ValueError(f"lex exponent arity {len(vec)} != {arity}")
    return vec


_TERM_RE = re.compile(r"^(-?\d+)\*v\^\((.+)\)$")


class LaurentElt:
    """A finitely supported Z-combination of symbols v^g, g in G.

    Terms are kept with nonzero coefficients only and are canonically
    ordered by exponent, so equality and sign-splitting are canonical.
    Instances are immutable; operators return fresh values.
    """

    __slots__ = ("mode", "arity", "_terms", "_key")

    def __init__(self, mode: str, arity: Optional[int], terms: dict):
        self.mode = mode
        self.arity = arity
        self._terms = {g: c for g, c in terms.items() if c != 0}
        self._key = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(mode: str = RATIONAL, arity: Optional[int] = None) -> "LaurentElt":
        return LaurentElt(mode, arity, {})

    @staticmethod
    def integer(n: int, mode: str = RATIONAL, arity: Optional[int] = None) -> "LaurentElt":
        return LaurentElt(mode, arity, {_zero_value(mode, arity): int(n)})

    @staticmethod
    def one(mode: str = RATIONAL, arity: Optional[int] = None) -> "LaurentElt":
        return LaurentElt.integer(1, mode, arity)

    @staticmethod
    def v_power(exp: OrderedExponent, coeff: int = 1) -> "LaurentElt":
        return LaurentElt(exp.mode, exp.arity, {exp.value: int(coeff)})

    @staticmethod
    def from_terms(terms: Iterable[Tuple[OrderedExponent, int]],
                   mode: str = RATIONAL, arity: Optional[int] = None) -> "LaurentElt":
        acc: dict = {}
        for exp, coeff in terms:
            if exp.mode != mode or exp.arity != arity:
                raise ModeMismatchError("term exponent does not match element mode")
            acc[exp.value] = acc.get(exp.value, 0) + int(coeff)
        return LaurentElt(mode, arity, acc)

    # -- basic queries -----------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> Iterator[Tuple[OrderedExponent, int]]:
        for g in sorted(self._terms):
            yield OrderedExponent(self.mode, g), self._terms[g]

    def coefficient(self, exp: OrderedExponent) -> int:
        return self._terms.get(exp.value, 0)

    def support_size(self) -> int:
        return len(self._terms)

    def _canonical_key(self):
        if self._key is None:
            self._key = (self.mode, self.arity, tuple(sorted(self._terms.items())))
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentElt):
            return NotImplemented
        return self._canonical_key() == other._canonical_key()

    def __hash__(self) -> int:
        return hash(self._canonical_key())

    def _check(self, other: "LaurentElt") -> None:
        if self.mode != other.mode or self.arity != other.arity:
            raise ModeMismatchError(
                f"coefficient rings differ: {self.mode}/{self.arity} vs "
                f"{other.mode}/{other.arity}"
            )

    # -- ring operations ---------------------------------------------

    def __add__(self, other: "LaurentElt") -> "LaurentElt":
        self._check(other)
        acc = dict(self._terms)
        for g, c in other._terms.items():
            acc[g] = acc.get(g, 0) + c
        return LaurentElt(self.mode, self.arity, acc)

    def __neg__(self) -> "LaurentElt":
        return LaurentElt(self.mode, self.arity, {g: -c for g, c in self._terms.items()})

    def __sub__(self, other: "LaurentElt") -> "LaurentElt":
        return self + (-other)

    def __mul__(self, other) -> "LaurentElt":
        if isinstance(other, int):
            return LaurentElt(self.mode, self.arity,
                              {g: c * other for g, c in self._terms.items()})
        self._check(other)
        acc: dict = {}
        if self.mode == RATIONAL:
            for g1, c1 in self._terms.items():
                for g2, c2 in other._terms.items():
                    g = g1 + g2
                    acc[g] = acc.get(g, 0) + c1 * c2
        else:
            for g1, c1 in self._terms.items():
                for g2, c2 in other._terms.items():
                    g = tuple(a + b for a, b in zip(g1, g2))
                    acc[g] = acc.get(g, 0) + c1 * c2
        return LaurentElt(self.mode, self.arity, acc)

    def __rmul__(self, other) -> "LaurentElt":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def bar(self) -> "LaurentElt":
        """The involution v^g -> v^(-g), an exact ring automorphism."""
        if self.mode == RATIONAL:
            return LaurentElt(self.mode, self.arity,
                              {-g: c for g, c in self._terms.items()})
        return LaurentElt(self.mode, self.arity,
                          {tuple(-a for a in g): c for g, c in self._terms.items()})

    def split_by_sign(self) -> Tuple["LaurentElt", int, "LaurentElt"]:
        """Split into (negative-exponent part, coefficient of v^0, positive part)."""
        zero = _zero_value(self.mode, self.arity)
        neg: dict = {}
        pos: dict = {}
        const = 0
        for g, c in self._terms.items():
            if g < zero:
                neg[g] = c
            elif g > zero:
                pos[g] = c
            else:
                const = c
        return (LaurentElt(self.mode, self.arity, neg), const,
                LaurentElt(self.mode, self.arity, pos))

    def evaluate_at_one(self) -> int:
        """The ring homomorphism to Z sending every v^g to 1."""
        return sum(self._terms.values())

    # -- textual form ------------------------------------------------

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for g in sorted(self._terms):
            exp = OrderedExponent(self.mode, g)
            parts.append(f"{self._terms[g]}*v^({exp.render()})")
        return " + ".join(parts)

    @staticmethod
    def parse(text: str, mode: str = RATIONAL, arity: Optional[int] = None) -> "LaurentElt":
        text = text.strip()
        if text == "0":
            return LaurentElt.zero(mode, arity)
        acc: dict = {}
        for part in text.split(" + "):
            m = _TERM_RE.match(part.strip())
            if m is None:
                raise ValueError(f"cannot parse Laurent term {part!r}")
            coeff = int(m.group(1))
            g = _parse_exp_value(m.group(2), mode, arity)
            acc[g] = acc.get(g, 0) + coeff
        return LaurentElt(mode, arity, acc)

    def __repr__(self) -> str:
        return f"LaurentElt({self.render()!r})"
