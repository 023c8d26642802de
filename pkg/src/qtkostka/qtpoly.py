"""Sparse exact polynomials in the two formal variables q and t.

Coefficients are Python integers, exponents are nonnegative.  Instances
are immutable; arithmetic returns new objects and never normalizes away
exactness.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

TermKey = tuple[int, int]


def _coerce(value: Union["QTPoly", int]) -> "QTPoly":
    if isinstance(value, QTPoly):
        return value
    if isinstance(value, int):
        return QTPoly({(0, 0): value})
    raise TypeError(f"cannot treat {value!r} as a q,t-polynomial")


class QTPoly:
    """Polynomial in q and t with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[TermKey, int] | None = None):
        clean: dict[TermKey, int] = {}
        for (dq, dt), coeff in (terms or {}).items():
            if dq < 0 or dt < 0:
                raise ValueError(f"negative exponent in term q^{dq} t^{dt}")
            if coeff:
                clean[(dq, dt)] = coeff
        self._terms = clean

    @classmethod
    def zero(cls) -> "QTPoly":
        return cls()

    @classmethod
    def one(cls) -> "QTPoly":
        return cls({(0, 0): 1})

    @classmethod
    def q(cls, power: int = 1) -> "QTPoly":
        return cls({(power, 0): 1})

    @classmethod
    def t(cls, power: int = 1) -> "QTPoly":
        return cls({(0, power): 1})

    @classmethod
    def monomial(cls, dq: int, dt: int, coeff: int = 1) -> "QTPoly":
        return cls({(dq, dt): coeff})

    def terms(self) -> list[tuple[TermKey, int]]:
        """Terms sorted lexicographically by (q-degree, t-degree)."""
        return sorted(self._terms.items())

    def coefficient(self, dq: int, dt: int) -> int:
        return self._terms.get((dq, dt), 0)

    @property
    def deg_q(self) -> int:
        return max((dq for dq, _ in self._terms), default=0)

    @property
    def deg_t(self) -> int:
        return max((dt for _, dt in self._terms), default=0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = _coerce(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: Union["QTPoly", int]) -> "QTPoly":
        other = _coerce(other)
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return QTPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> "QTPoly":
        return QTPoly({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other: Union["QTPoly", int]) -> "QTPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["QTPoly", int]) -> "QTPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: Union["QTPoly", int]) -> "QTPoly":
        other = _coerce(other)
        product: dict[TermKey, int] = {}
        for (aq, at), ac in self._terms.items():
            for (bq, bt), bc in other._terms.items():
                key = (aq + bq, at + bt)
                product[key] = product.get(key, 0) + ac * bc
        return QTPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QTPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = QTPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, q0: Fraction, t0: Fraction) -> Fraction:
        """Exact value at the point (q0, t0)."""
        total = Fraction(0)
        for (dq, dt), coeff in self._terms.items():
            total += coeff * Fraction(q0) ** dq * Fraction(t0) ** dt
        return total

    def evaluate_t(self, t0: Fraction) -> Fraction:
        """Value at t=t0 for polynomials with no q terms."""
        if self.deg_q:
            raise ValueError("polynomial involves q")
        return self.evaluate(Fraction(0), t0)

    def q_zero(self) -> "QTPoly":
        """The specialization q = 0."""
        return QTPoly({key: c for key, c in self._terms.items() if key[0] == 0})

    def swap_qt(self) -> "QTPoly":
        """Exchange the roles of q and t."""
        return QTPoly({(dt, dq): c for (dq, dt), c in self._terms.items()})

    def reverse(self, bound_q: int, bound_t: int) -> "QTPoly":
        """q^A t^B P(1/q, 1/t) for A=bound_q, B=bound_t."""
        if bound_q < self.deg_q or bound_t < self.deg_t:
            raise ValueError("reversal bounds below the actual degrees")
        return QTPoly(
            {(bound_q - dq, bound_t - dt): c for (dq, dt), c in self._terms.items()}
        )

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def to_terms(self) -> list[list]:
        """JSON form: [dq, dt, coefficient-as-decimal-string] triples."""
        return [[dq, dt, str(c)] for (dq, dt), c in self.terms()]

    @classmethod
    def from_terms(cls, triples: Iterable[Iterable]) -> "QTPoly":
        data: dict[TermKey, int] = {}
        for dq, dt, coeff in triples:
            key = (int(dq), int(dt))
            data[key] = data.get(key, 0) + int(coeff)
        return cls(data)

    def _render(self, mul: str, power) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (dq, dt), coeff in self.terms():
            factors = []
            if dq:
                factors.append("q" + (power(dq) if dq > 1 else ""))
            if dt:
                factors.append("t" + (power(dt) if dt > 1 else ""))
            mag = abs(coeff)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = mul.join(factors)
            if not pieces:
                pieces.append(body if coeff > 0 else "-" + body)
            else:
                pieces.append((" + " if coeff > 0 else " - ") + body)
        return "".join(pieces)

    def __str__(self) -> str:
        return self._render("*", lambda e: f"^{e}")

    def latex(self) -> str:
        return self._render("", lambda e: f"^{{{e}}}")

    def __repr__(self) -> str:
        return f"QTPoly({self})"
