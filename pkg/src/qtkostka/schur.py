"""Schur expansions and the operators that act on them.

A SchurExpansion is a finite linear combination of Schur functions with
QTPoly coefficients.  The operators below are linear; most require a
homogeneous argument because their series truncation depends on the
degree.
"""

from __future__ import annotations

from typing import Callable, Mapping, Union

from .partitions import (
    Partition,
    conjugate,
    horizontal_strips,
    horizontal_strips_inside,
    remove_snake,
    snake_height,
    vertical_strips,
    vertical_strips_inside,
)
from .qtpoly import QTPoly

Coeff = Union[QTPoly, int]


def _poly(value: Coeff) -> QTPoly:
    return value if isinstance(value, QTPoly) else QTPoly({(0, 0): value})


def _sort_key(lam: Partition) -> tuple:
    return (sum(lam), tuple(-p for p in lam))


class SchurExpansion:
    """Mapping from partitions to nonzero QTPoly coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, Coeff] | None = None):
        clean: dict[Partition, QTPoly] = {}
        for lam, coeff in (terms or {}).items():
            poly = _poly(coeff)
            if poly:
                clean[tuple(lam)] = poly
        self._terms = clean

    @classmethod
    def unit(cls) -> "SchurExpansion":
        """The constant symmetric function 1."""
        return cls({(): 1})

    @classmethod
    def schur(cls, lam: Partition) -> "SchurExpansion":
        return cls({tuple(lam): 1})

    def terms(self) -> list[tuple[Partition, QTPoly]]:
        """Terms sorted by size then descending lexicographic partition."""
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    def partitions(self) -> list[Partition]:
        return [lam for lam, _ in self.terms()]

    def coefficient(self, lam: Partition) -> QTPoly:
        return self._terms.get(tuple(lam), QTPoly.zero())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        merged = dict(self._terms)
        for lam, coeff in other._terms.items():
            merged[lam] = merged.get(lam, QTPoly.zero()) + coeff
        return SchurExpansion(merged)

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self + other.scaled(-1)

    def __neg__(self) -> "SchurExpansion":
        return self.scaled(-1)

    def scaled(self, coeff: Coeff) -> "SchurExpansion":
        factor = _poly(coeff)
        return SchurExpansion({lam: c * factor for lam, c in self._terms.items()})

    def map_coefficients(self, fn: Callable[[QTPoly], QTPoly]) -> "SchurExpansion":
        return SchurExpansion({lam: fn(c) for lam, c in self._terms.items()})

    def degree(self) -> int | None:
        """Common size of the indexing partitions; None when empty."""
        sizes = {sum(lam) for lam in self._terms}
        if not sizes:
            return None
        if len(sizes) > 1:
            raise ValueError(f"expansion mixes degrees {sorted(sizes)}")
        return sizes.pop()

    def is_nonnegative(self) -> bool:
        return all(c.is_nonnegative() for c in self._terms.values())

    def to_json(self) -> dict:
        return {
            "degree": self.degree() if self._terms else 0,
            "terms": [
                {"lambda": list(lam), "coeff": coeff.to_terms()}
                for lam, coeff in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SchurExpansion":
        return cls(
            {
                tuple(entry["lambda"]): QTPoly.from_terms(entry["coeff"])
                for entry in data["terms"]
            }
        )

    def __repr__(self) -> str:
        if not self._terms:
            return "SchurExpansion(0)"
        bits = [f"({coeff})*s{lam}" for lam, coeff in self.terms()]
        return "SchurExpansion(" + " + ".join(bits) + ")"


def _apply(f: SchurExpansion, image: Callable[[Partition], SchurExpansion]) -> SchurExpansion:
    total: dict[Partition, QTPoly] = {}
    for lam, coeff in f.terms():
        for mu, piece in image(lam).terms():
            total[mu] = total.get(mu, QTPoly.zero()) + coeff * piece
    return SchurExpansion(total)


def mul_h(k: int, f: SchurExpansion) -> SchurExpansion:
    """Multiplication by the homogeneous symmetric function h_k."""
    if k < 0:
        return SchurExpansion()
    if k == 0:
        return f
    return _apply(f, lambda lam: SchurExpansion({mu: 1 for mu in horizontal_strips(lam, k)}))


def mul_e(k: int, f: SchurExpansion) -> SchurExpansion:
    """Multiplication by the elementary symmetric function e_k."""
    if k < 0:
        return SchurExpansion()
    if k == 0:
        return f
    return _apply(f, lambda lam: SchurExpansion({mu: 1 for mu in vertical_strips(lam, k)}))


def skew_h(k: int, f: SchurExpansion) -> SchurExpansion:
    """The adjoint of mul_h: removes horizontal k-strips."""
    if k < 0:
        return SchurExpansion()
    if k == 0:
        return f
    return _apply(
        f, lambda lam: SchurExpansion({mu: 1 for mu in horizontal_strips_inside(lam, k)})
    )


def skew_e(k: int, f: SchurExpansion) -> SchurExpansion:
    """The adjoint of mul_e: removes vertical k-strips."""
    if k < 0:
        return SchurExpansion()
    if k == 0:
        return f
    return _apply(
        f, lambda lam: SchurExpansion({mu: 1 for mu in vertical_strips_inside(lam, k)})
    )


def bernstein(m: int, f: SchurExpansion) -> SchurExpansion:
    """The Bernstein row-adding operator, as the series sum_k (-1)^k h_{m+k} e_k-perp.

    On s_mu with m >= mu_1 it yields s_{(m, mu)}; smaller m follows the
    straightening implicit in the alternating series.
    """
    degree = f.degree()
    if degree is None:
        return SchurExpansion()
    total = SchurExpansion()
    for k in range(degree + 1):
        reduced = skew_e(k, f)
        if not reduced:
            continue
        piece = mul_h(m + k, reduced)
        total = total + (piece if k % 2 == 0 else piece.scaled(-1))
    return total


def hl_vertex(m: int, f: SchurExpansion) -> SchurExpansion:
    """Jing's Hall-Littlewood vertex operator sum_k t^k S_{m+k} h_k-perp."""
    degree = f.degree()
    if degree is None:
        return SchurExpansion()
    total = SchurExpansion()
    for k in range(degree + 1):
        reduced = skew_h(k, f)
        if not reduced:
            continue
        total = total + bernstein(m + k, reduced).scaled(QTPoly.t(k))
    return total


def hl_vertex_snake(m: int, f: SchurExpansion, k: int | None = None) -> SchurExpansion:
    """The Hall-Littlewood vertex operator computed by the border-snake rule.

    For each term s_lam, sum over mu with mu/lam a horizontal (m+k)-strip
    the signed term (-1)^(height-1) t^(mu_1 - m - k) s_(mu minus k-snake),
    skipping mu whose snake complement is not a partition.  Any k with
    m + k >= lam_1 gives the same answer; the default is the smallest.
    """
    total: dict[Partition, QTPoly] = {}
    for lam, coeff in f.terms():
        first = lam[0] if lam else 0
        kk = max(0, first - m) if k is None else k
        if m + kk < first:
            raise ValueError(f"need m+k >= {first} for shape {lam}, got {m + kk}")
        for mu in horizontal_strips(lam, m + kk):
            rest = remove_snake(mu, kk)
            if rest is None:
                continue
            sign = 1 if kk == 0 else (-1) ** (snake_height(mu, kk) - 1)
            texp = sum(lam) - (sum(mu) - (mu[0] if mu else 0))
            piece = coeff * QTPoly.monomial(0, texp, sign)
            total[rest] = total.get(rest, QTPoly.zero()) + piece
    return SchurExpansion(total)


def hl_vertex_dual(m: int, f: SchurExpansion) -> SchurExpansion:
    """The dual vertex operator sum_{i,j} t^(n-j) (-1)^i e_{m+i+j} h_i-perp e_j-perp,
    where n is the degree of the (homogeneous) argument."""
    degree = f.degree()
    if degree is None:
        return SchurExpansion()
    total = SchurExpansion()
    for j in range(degree + 1):
        stripped = skew_e(j, f)
        if not stripped:
            continue
        for i in range(degree - j + 1):
            reduced = skew_h(i, stripped)
            if not reduced:
                continue
            sign = 1 if i % 2 == 0 else -1
            piece = mul_e(m + i + j, reduced).scaled(QTPoly.monomial(0, degree - j, sign))
            total = total + piece
    return total


def omega(f: SchurExpansion) -> SchurExpansion:
    """The involution sending s_lam to s_(lam conjugate)."""
    return SchurExpansion({conjugate(lam): c for lam, c in f.terms()})


def t_grade(f: SchurExpansion) -> SchurExpansion:
    """Multiply a homogeneous expansion of degree n by t^n."""
    degree = f.degree()
    if degree is None:
        return SchurExpansion()
    return f.scaled(QTPoly.t(degree)) if degree else f
