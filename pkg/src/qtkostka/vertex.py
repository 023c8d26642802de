"""Vertex-operator construction of the Macdonald functions H_mu[X;q,t].

Shapes with at most one part larger than 2 (and that part at most 4) are
built by iterating a two-column creation operator on a charge-seeded
Hall-Littlewood base and finishing with a row-adding operator; all other
supported shapes are conjugates of these.  Hall-Littlewood expansions of
the same functions, with coefficients given by closed q,t-binomial
formulas, provide an independent route used by the checks.
"""

from __future__ import annotations

from functools import cache
from threading import Lock
from typing import Callable, Mapping, Optional, Union

from .partitions import (
    Partition,
    conjugate,
    format_partition,
    is_partition,
)
from .qtpoly import QTPoly
from .schur import (
    SchurExpansion,
    hl_vertex,
    hl_vertex_dual,
    mul_e,
    mul_h,
    omega,
)
from .tableaux import Tableau, column_strict_tableaux, reading_word, charge, shape

Coeff = Union[QTPoly, int]


class UnsupportedShapeError(ValueError):
    """Raised for partitions outside the supported shape families."""


def classify_shape(mu: Partition) -> tuple:
    """Sort mu into a direct family ("direct", m, a, b) or ("conjugate", nu).

    Direct families: m=2 covers mu = (2^a 1^b); m=3 and m=4 cover
    (m, 2^a, 1^b).  A shape is conjugate-supported when its transpose is
    direct.  Everything else raises UnsupportedShapeError.
    """
    mu = tuple(mu)
    if mu and not is_partition(mu):
        raise ValueError(f"{mu} is not a partition")
    direct = _direct_family(mu)
    if direct is not None:
        return ("direct",) + direct
    nu = conjugate(mu)
    if _direct_family(nu) is not None:
        return ("conjugate", nu)
    raise UnsupportedShapeError(
        f"shape ({format_partition(mu)}) has no vertex-operator route"
    )


def _direct_family(mu: Partition) -> Optional[tuple[int, int, int]]:
    if all(p <= 2 for p in mu):
        return (2, mu.count(2), mu.count(1))
    rest = mu[1:]
    if mu[0] in (3, 4) and all(p <= 2 for p in rest):
        return (mu[0], rest.count(2), rest.count(1))
    return None


def vertex2(f: SchurExpansion) -> SchurExpansion:
    """The operator H_2^t + q Hbar_2^t prepending a column of height <= 2."""
    return hl_vertex(2, f) + hl_vertex_dual(2, f).scaled(QTPoly.q(1))


def vertex3(f: SchurExpansion) -> SchurExpansion:
    """The row-3 creation operator, expanded in powers of q."""
    h3, b3 = hl_vertex(3, f), hl_vertex_dual(3, f)
    h2, b2 = hl_vertex(2, f), hl_vertex_dual(2, f)
    return (
        h3
        + (mul_e(1, h2) - h3).scaled(QTPoly.q(1))
        + (mul_e(1, b2) - b3).scaled(QTPoly.q(2))
        + b3.scaled(QTPoly.q(3))
    )


def vertex4(f: SchurExpansion) -> SchurExpansion:
    """The row-4 creation operator, expanded in powers of q."""
    h4, b4 = hl_vertex(4, f), hl_vertex_dual(4, f)
    h3, b3 = hl_vertex(3, f), hl_vertex_dual(3, f)
    h2, b2 = hl_vertex(2, f), hl_vertex_dual(2, f)
    q = QTPoly.q
    return (
        h4
        + (mul_h(1, h3) - h4).scaled(q(1))
        + (mul_h(2, h2) - h4).scaled(q(2))
        + (mul_e(2, h2) - mul_e(1, h3) + h4).scaled(q(3))
        + (mul_h(2, b2) - mul_h(1, b3) + b4).scaled(q(3))
        + (mul_e(2, b2) - b4).scaled(q(4))
        + (mul_e(1, b3) - b4).scaled(q(5))
        + b4.scaled(q(6))
    )


def vertex4_third_form(f: SchurExpansion) -> SchurExpansion:
    """The factored rewriting of vertex4 through vertex3 and vertex2."""
    q = QTPoly.q
    one = QTPoly.one()
    h4, b4 = hl_vertex(4, f), hl_vertex_dual(4, f)
    head = (h4 + b4.scaled(q(3))).scaled((one - q(1)) * (one - q(2)))
    v3 = vertex3(f)
    v2 = vertex2(f)
    middle = mul_e(1, v3).scaled(q(1) + q(2))
    tail = mul_e(2, v2).scaled(q(2)) + mul_h(2, v2).scaled(q(3))
    return head + middle - tail


def vertex4_second_form(f: SchurExpansion) -> SchurExpansion:
    """A differently grouped printed variant of vertex4.

    As printed this expression disagrees with vertex4 (on the constant 1
    its s_(4) coefficient is 1 - 2q + 2q^3); it is provided so the
    discrepancy can be detected, and is never used to build anything.
    """
    q = QTPoly.q
    one = QTPoly.one()
    h4, b4 = hl_vertex(4, f), hl_vertex_dual(4, f)
    h3, b3 = hl_vertex(3, f), hl_vertex_dual(3, f)
    h2, b2 = hl_vertex(2, f), hl_vertex_dual(2, f)
    head = (h4 + b4.scaled(q(3))).scaled((one - q(1)) * (one - q(2)))
    middle = mul_e(1, h3 - b3.scaled(q(2))).scaled(q(1) * (one - q(2)))
    inner = h2 + b2.scaled(q(1))
    tail = (mul_h(2, inner) + mul_e(2, inner).scaled(q(1))).scaled(q(2))
    return head - middle + tail


def qt_vertex(m: int, f: SchurExpansion) -> SchurExpansion:
    if m == 2:
        return vertex2(f)
    if m == 3:
        return vertex3(f)
    if m == 4:
        return vertex4(f)
    raise ValueError(f"no q,t vertex operator for row size {m}")


# --- head components -------------------------------------------------------

_T = Tableau
Operator = Callable[[SchurExpansion], SchurExpansion]


def component_groups(m: int) -> list[tuple[int, tuple[_T, ...], Operator]]:
    """The q-graded pieces of qt_vertex(m), keyed by the head tableaux whose
    statistics they generate.  Two size-4 groups carry a pair of heads that
    only occur combined."""
    if m == 3:
        return [
            (0, (((1, 2, 3),),), lambda f: hl_vertex(3, f)),
            (1, (((1, 3), (2,)),), lambda f: mul_e(1, hl_vertex(2, f)) - hl_vertex(3, f)),
            (
                2,
                (((1, 2), (3,)),),
                lambda f: mul_e(1, hl_vertex_dual(2, f)) - hl_vertex_dual(3, f),
            ),
            (3, (((1,), (2,), (3,)),), lambda f: hl_vertex_dual(3, f)),
        ]
    if m == 4:
        return [
            (0, (((1, 2, 3, 4),),), lambda f: hl_vertex(4, f)),
            (
                1,
                (((1, 3, 4), (2,)),),
                lambda f: mul_h(1, hl_vertex(3, f)) - hl_vertex(4, f),
            ),
            (
                2,
                (((1, 2, 4), (3,)), ((1, 2), (3, 4))),
                lambda f: mul_h(2, hl_vertex(2, f)) - hl_vertex(4, f),
            ),
            (
                3,
                (((1, 2, 3), (4,)),),
                lambda f: mul_h(2, hl_vertex_dual(2, f))
                - mul_h(1, hl_vertex_dual(3, f))
                + hl_vertex_dual(4, f),
            ),
            (
                3,
                (((1, 4), (2,), (3,)),),
                lambda f: mul_e(2, hl_vertex(2, f))
                - mul_e(1, hl_vertex(3, f))
                + hl_vertex(4, f),
            ),
            (
                4,
                (((1, 3), (2, 4)), ((1, 3), (2,), (4,))),
                lambda f: mul_e(2, hl_vertex_dual(2, f)) - hl_vertex_dual(4, f),
            ),
            (
                5,
                (((1, 2), (3,), (4,)),),
                lambda f: mul_e(1, hl_vertex_dual(3, f)) - hl_vertex_dual(4, f),
            ),
            (6, (((1,), (2,), (3,), (4,)),), lambda f: hl_vertex_dual(4, f)),
        ]
    raise ValueError(f"no component table for head size {m}")


def component_operator(head: _T) -> tuple[Operator, tuple[_T, ...]]:
    """The graded component a head tableau belongs to, with all heads sharing it."""
    m = sum(len(row) for row in head)
    for _, heads, op in component_groups(m):
        if head in heads:
            return op, heads
    raise ValueError(f"{head} is not a head tableau of size 3 or 4")


def reassembled_vertex(m: int, f: SchurExpansion) -> SchurExpansion:
    """Sum of q^gamma times each component group; must equal qt_vertex(m, f)."""
    total = SchurExpansion()
    for gamma, _, op in component_groups(m):
        total = total + op(f).scaled(QTPoly.q(gamma))
    return total


# --- Macdonald functions ----------------------------------------------------


@cache
def hall_littlewood(nu: Partition) -> SchurExpansion:
    """H_nu[X;t] expanded in Schur functions via charge."""
    total: dict[Partition, QTPoly] = {}
    for tab in column_strict_tableaux(tuple(nu)):
        sh = shape(tab)
        total[sh] = total.get(sh, QTPoly.zero()) + QTPoly.t(charge(reading_word(tab)))
    return SchurExpansion(total)


_MACD_CACHE: dict[Partition, SchurExpansion] = {}
_MACD_LOCK = Lock()


def macdonald(mu: Partition) -> SchurExpansion:
    """The Macdonald function H_mu[X;q,t] in the Schur basis."""
    mu = tuple(mu)
    with _MACD_LOCK:
        hit = _MACD_CACHE.get(mu)
    if hit is not None:
        return hit
    result = _macdonald_uncached(mu)
    with _MACD_LOCK:
        _MACD_CACHE.setdefault(mu, result)
    return result


def _macdonald_uncached(mu: Partition) -> SchurExpansion:
    kind = classify_shape(mu)
    if kind[0] == "conjugate":
        base = macdonald(kind[1])
        return omega(base.map_coefficients(lambda p: p.swap_qt()))
    _, m, a, b = kind
    f = hall_littlewood((1,) * b)
    for _ in range(a):
        f = vertex2(f)
    if m > 2:
        f = qt_vertex(m, f)
    return f


def kostka(lam: Partition, mu: Partition) -> QTPoly:
    """The q,t-Kostka coefficient K_{lam,mu}(q,t)."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return macdonald(mu).coefficient(lam)


# --- Hall-Littlewood expansions with closed coefficients --------------------


class HLExpansion:
    """A linear combination of Hall-Littlewood functions H_nu[X;t]."""

    basis = "hall-littlewood-t"
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, Coeff] | None = None):
        clean: dict[Partition, QTPoly] = {}
        for nu, coeff in (terms or {}).items():
            poly = coeff if isinstance(coeff, QTPoly) else QTPoly({(0, 0): coeff})
            if poly:
                clean[tuple(nu)] = poly
        self._terms = clean

    def terms(self) -> list[tuple[Partition, QTPoly]]:
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))

    def coefficient(self, nu: Partition) -> QTPoly:
        return self._terms.get(tuple(nu), QTPoly.zero())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HLExpansion):
            return NotImplemented
        return self._terms == other._terms

    def to_schur(self) -> SchurExpansion:
        total = SchurExpansion()
        for nu, coeff in self.terms():
            total = total + hall_littlewood(nu).scaled(coeff)
        return total

    def to_json(self) -> dict:
        degree = {sum(nu) for nu in self._terms}
        return {
            "basis": self.basis,
            "degree": degree.pop() if len(degree) == 1 else 0,
            "terms": [
                {"lambda": list(nu), "coeff": coeff.to_terms()}
                for nu, coeff in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, blob: Mapping) -> "HLExpansion":
        if blob.get("basis") != cls.basis:
            raise ValueError(f"expected basis {cls.basis!r}")
        return cls(
            {
                tuple(entry["lambda"]): QTPoly.from_terms(entry["coeff"])
                for entry in blob["terms"]
            }
        )

    def __repr__(self) -> str:
        bits = [f"({coeff})*H{nu}" for nu, coeff in self.terms()]
        return "HLExpansion(" + (" + ".join(bits) or "0") + ")"


@cache
def gaussian_binomial(n: int, k: int) -> QTPoly:
    """The t-binomial coefficient, by the Pascal recurrence (no division)."""
    if k < 0 or k > n:
        return QTPoly.zero()
    if k == 0 or k == n:
        return QTPoly.one()
    return gaussian_binomial(n - 1, k - 1) + QTPoly.t(k) * gaussian_binomial(n - 1, k)


def t_pochhammer(dq: int, dt: int, length: int) -> QTPoly:
    """(x; t)_length for x = q^dq t^dt: the product of (1 - x t^j), j < length."""
    out = QTPoly.one()
    for j in range(length):
        out = out * (QTPoly.one() - QTPoly.monomial(dq, dt + j))
    return out


def stem_coefficient(a: int, b: int, i: int) -> QTPoly:
    """Coefficient of H_(2^i 1^(b+2a-2i))[X;t] in H_(2^a 1^b)[X;q,t]."""
    if i < 0 or i > a:
        return QTPoly.zero()
    return (
        QTPoly.q(a - i)
        * t_pochhammer(1, a + b - i + 1, i)
        * gaussian_binomial(a, i)
    )


def two_column_hl(a: int, b: int) -> HLExpansion:
    """H_(2^a 1^b)[X;q,t] expanded in the Hall-Littlewood basis."""
    return HLExpansion(
        {
            (2,) * i + (1,) * (b + 2 * a - 2 * i): stem_coefficient(a, b, i)
            for i in range(a + 1)
        }
    )


def row3_hl(a: int, b: int) -> HLExpansion:
    """H_(3 2^a 1^b)[X;q,t] expanded in the Hall-Littlewood basis."""
    q, t, one = QTPoly.q, QTPoly.t, QTPoly.one()
    terms: dict[Partition, QTPoly] = {}

    def put(nu: Partition, coeff: QTPoly) -> None:
        if coeff:
            terms[nu] = terms.get(nu, QTPoly.zero()) + coeff

    head = (one - q(2) * t(a + b + 1)) * (one - q(1) * t(a + 1))
    for i in range(a + 1):
        put((3,) + (2,) * i + (1,) * (2 * a + b - 2 * i), stem_coefficient(a, b, i) * head)
    put((1,) * (2 * a + b + 3), q(a + 3))
    for i in range(1, a + 3):
        ones = 2 * a + b + 3 - 2 * i
        coeff = (
            q(1) * stem_coefficient(a + 1, b, i)
            + (one - t(2 * a + b + 4 - 2 * i)) * q(1) * stem_coefficient(a + 1, b, i - 1)
            + q(2) * (q(1) - one) * stem_coefficient(a, b, i) * t(i)
            - q(2) * (q(1) - one) * stem_coefficient(a, b, i - 1) * t(2 * a + b + 2 - i) * (one + t(1))
            - q(2)
            * (q(1) - one)
            * stem_coefficient(a, b, i - 2)
            * t(2 * a + b + 3 - i)
            * (one - t(2 * a + b + 4 - 2 * i))
        )
        if ones < 0:
            if coeff:
                raise RuntimeError(
                    f"row3 expansion at a={a}, b={b}: nonzero weight on invalid shape"
                )
            continue
        put((2,) * i + (1,) * ones, coeff)
    return HLExpansion(terms)


# --- Hall-Littlewood operator identities ------------------------------------


def _omt(k: int) -> QTPoly:
    """1 - t^k (k must be nonnegative; zero gives the zero polynomial)."""
    if k < 0:
        raise ValueError(f"negative exponent {k}")
    return QTPoly.one() - QTPoly.t(k)


def _prod(*factors) -> QTPoly:
    """Product with lazy factors; short-circuits at zero so that guarded
    factors with otherwise-invalid exponents are never evaluated."""
    out = QTPoly.one()
    for factor in factors:
        if not out:
            return out
        value = factor() if callable(factor) else factor
        out = out * value
    return out


def _sh(*groups: tuple[int, int]) -> Optional[Partition]:
    """Build a shape from (part, multiplicity) groups; None when invalid."""
    rows: list[int] = []
    for value, count in groups:
        if count < 0:
            return None
        rows.extend([value] * count)
    sh = tuple(rows)
    return sh if is_partition(sh) or sh == () else None


def _identity_entry(name: str, params: dict, lhs: SchurExpansion, rhs_terms) -> dict:
    rhs = SchurExpansion()
    for coeff, nu in rhs_terms:
        if not coeff:
            continue
        if nu is None:
            return {
                "check": name,
                "params": params,
                "status": "fail",
                "detail": "nonzero coefficient on an invalid shape",
            }
        rhs = rhs + hall_littlewood(nu).scaled(coeff)
    ok = lhs == rhs
    detail = "exact match" if ok else f"lhs {lhs!r} != rhs {rhs!r}"
    return {"check": name, "params": params, "status": "pass" if ok else "fail", "detail": detail}


def hl_identity_suite(max_n: int) -> list[dict]:
    """Check the Hall-Littlewood expansion identities for all parameters whose
    larger side has size at most max_n.  Both sides are expanded into Schur
    functions through charge, so the comparison is exact."""
    if max_n > 9:
        raise ValueError("identity suite is bounded at max_n <= 9")
    t, one = QTPoly.t, QTPoly.one()
    entries: list[dict] = []

    def base(x: int, y: int) -> SchurExpansion:
        return hall_littlewood((2,) * x + (1,) * y)

    def base3(a: int, b: int) -> SchurExpansion:
        return hall_littlewood((3,) + (2,) * a + (1,) * b)

    for x in range(max_n + 1):
        for y in range(max_n + 1):
            n = 2 * x + y
            if n + 1 <= max_n:
                entries.append(
                    _identity_entry(
                        "hl-identity/e1-two-column",
                        {"x": x, "y": y},
                        mul_e(1, base(x, y)),
                        [
                            (one, _sh((2, x), (1, y + 1))),
                            (_omt(y), _sh((2, x + 1), (1, y - 1))),
                            (_omt(x), _sh((3, 1), (2, x - 1), (1, y))),
                        ],
                    )
                )
            if n + 2 <= max_n:
                entries.append(
                    _identity_entry(
                        "hl-identity/h2-two-column",
                        {"x": x, "y": y},
                        mul_h(2, base(x, y)),
                        [
                            (one, _sh((2, x + 1), (1, y))),
                            (_omt(y), _sh((3, 1), (2, x), (1, y - 1))),
                            (_omt(x), _sh((3, 1), (2, x - 1), (1, y + 1))),
                            (_omt(x), _sh((4, 1), (2, x - 1), (1, y))),
                        ],
                    )
                )
                entries.append(
                    _identity_entry(
                        "hl-identity/h1h1-two-column",
                        {"x": x, "y": y},
                        mul_h(1, mul_h(1, base(x, y))),
                        [
                            (one, _sh((2, x), (1, y + 2))),
                            (_omt(y + 1) + _omt(y), _sh((2, x + 1), (1, y))),
                            (_prod(_omt(y), lambda: _omt(y - 1)), _sh((2, x + 2), (1, y - 2))),
                            (2 * _omt(x), _sh((3, 1), (2, x - 1), (1, y + 1))),
                            (_omt(y) * (_omt(x + 1) + _omt(x)), _sh((3, 1), (2, x), (1, y - 1))),
                            (_prod(_omt(x), lambda: _omt(x - 1)), _sh((3, 2), (2, x - 2), (1, y))),
                            (_omt(x) * _omt(1), _sh((4, 1), (2, x - 1), (1, y))),
                        ],
                    )
                )
            if n + 3 <= max_n:
                entries.append(
                    _identity_entry(
                        "hl-identity/dual3-two-column",
                        {"x": x, "y": y},
                        hl_vertex_dual(3, base(x, y)),
                        [
                            (t(x), _sh((2, x), (1, y + 3))),
                            (-t(x + y + 1) * (one + t(1)), _sh((2, x + 1), (1, y + 1))),
                            (-t(x + y + 1) * _omt(y), _sh((2, x + 2), (1, y - 1))),
                            (t(2 * x + y + 2), _sh((3, 1), (2, x), (1, y))),
                        ],
                    )
                )
            if n + 4 <= max_n:
                entries.append(
                    _identity_entry(
                        "hl-identity/dual4-two-column",
                        {"a": x, "b": y},
                        hl_vertex_dual(4, base(x, y)),
                        [
                            (t(x), _sh((2, x), (1, y + 4))),
                            (-t(x + y + 1) * (one + t(1) + t(2)), _sh((2, x + 1), (1, y + 2))),
                            (
                                -t(x + y + 1) * (one + t(1) - t(y) - t(y + 1) - t(y + 2)),
                                _sh((2, x + 2), (1, y)),
                            ),
                            (
                                -t(x + y + 1) * _prod(_omt(y), lambda: _omt(y - 1)),
                                _sh((2, x + 3), (1, y - 2)),
                            ),
                            (t(2 * x + y + 2) * (one + t(1)), _sh((3, 1), (2, x), (1, y + 1))),
                            (
                                t(2 * x + y + 2) * (one + t(1)) * _omt(y),
                                _sh((3, 1), (2, x + 1), (1, y - 1)),
                            ),
                            (t(2 * x + y + 2) * _omt(x), _sh((3, 2), (2, x - 1), (1, y))),
                            (-t(2 * x + y + 3), _sh((4, 1), (2, x), (1, y))),
                        ],
                    )
                )
            if 3 + 2 * x + y + 1 <= max_n:
                entries.append(
                    _identity_entry(
                        "hl-identity/e1-row3",
                        {"a": x, "b": y},
                        mul_e(1, base3(x, y)),
                        [
                            (one, _sh((3, 1), (2, x), (1, y + 1))),
                            (_omt(y), _sh((3, 1), (2, x + 1), (1, y - 1))),
                            (_omt(x), _sh((3, 2), (2, x - 1), (1, y))),
                            (_omt(1), _sh((4, 1), (2, x), (1, y))),
                        ],
                    )
                )
    entries.append(
        _identity_entry(
            "hl-identity/dual4-base",
            {},
            hl_vertex_dual(4, SchurExpansion.unit()),
            [
                (one, (1, 1, 1, 1)),
                (-t(1) * (one + t(1) + t(2)), (2, 1, 1)),
                (t(3), (2, 2)),
                (t(2) * (one + t(1)), (3, 1)),
                (-t(3), (4,)),
            ],
        )
    )
    return entries
