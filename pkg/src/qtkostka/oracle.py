"""Independent ground truth for the vertex-operator computations.

Everything in this module is built from first principles: symmetric-group
characters, scalar products evaluated at rational points, Gram-Schmidt
orthogonalization, charge enumeration, and hook lengths.  None of it touches
the vertex operators except where a check explicitly compares the two sides.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cache
from math import factorial

from .partitions import (
    Partition,
    arm_leg,
    dominance_leq,
    linear_extension,
    partitions_of,
)
from .qtpoly import QTPoly
from .schur import mul_e
from .tableaux import column_strict_tableaux, standard_tableaux, tableau_charge
from .vertex import gaussian_binomial, macdonald, stem_coefficient

Rational = Fraction
PowerExpansion = dict
NumericSchur = dict


class DegeneratePointError(ValueError):
    """Raised when a specialization point kills a needed denominator."""


def z_factor(lam: Partition) -> int:
    """The centralizer order z_lam = prod_i i^{m_i} m_i!."""
    out = 1
    mult: dict[int, int] = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        out *= p**m * factorial(m)
    return out


@cache
def character(lam: Partition, mu: Partition) -> int:
    """Irreducible symmetric-group character chi^lam evaluated on class mu.

    Computed by peeling border strips of size mu[0] off lam; a strip spanning
    rows i..j forces nu_r = lam_{r+1} - 1 on the intermediate rows, which
    leaves exactly one candidate per row interval.
    """
    if not mu:
        if not lam:
            return 1
        raise ValueError("character needs |lam| = |mu|")
    if sum(lam) != sum(mu):
        raise ValueError("character needs |lam| = |mu|")
    k, rest = mu[0], mu[1:]
    total = 0
    for i in range(1, len(lam) + 1):
        for j in range(i, len(lam) + 1):
            nu = list(lam)
            for r in range(i, j):
                nu[r - 1] = lam[r] - 1
            last = k - sum(lam[r - 1] - nu[r - 1] for r in range(i, j))
            if last < 1:
                continue
            nu[j - 1] = lam[j - 1] - last
            if nu[j - 1] < 0:
                continue
            trimmed = tuple(p for p in nu if p)
            if any(nu[r] < nu[r + 1] for r in range(len(nu) - 1)):
                continue
            total += (-1) ** (j - i) * character(trimmed, rest)
    return total


@cache
def schur_to_power(lam: Partition) -> PowerExpansion:
    """Coordinates of s_lam in the power-sum basis: chi^lam(rho) / z_rho."""
    out = {}
    for rho in partitions_of(sum(lam)):
        chi = character(lam, rho)
        if chi:
            out[rho] = Fraction(chi, z_factor(rho))
    return out


def power_coords(f: NumericSchur) -> PowerExpansion:
    """Convert a numeric Schur-coordinate vector to power-sum coordinates."""
    out: dict[Partition, Fraction] = {}
    for lam, c in f.items():
        if not c:
            continue
        for rho, w in schur_to_power(lam).items():
            out[rho] = out.get(rho, Fraction(0)) + c * w
    return {rho: v for rho, v in out.items() if v}


def scalar_qt(f: PowerExpansion, g: PowerExpansion, q0: Rational, t0: Rational) -> Fraction:
    """<f, g> with p_lam self-pairings z_lam prod (1-q0^k)/(1-t0^k)."""
    total = Fraction(0)
    for rho, fv in f.items():
        gv = g.get(rho)
        if not gv:
            continue
        weight = Fraction(z_factor(rho))
        for k in rho:
            den = 1 - Fraction(t0) ** k
            if den == 0:
                raise DegeneratePointError(f"1 - t0^{k} vanishes at t0 = {t0}")
            weight *= (1 - Fraction(q0) ** k) / den
        total += fv * gv * weight
    return total


def scalar_t(f: PowerExpansion, g: PowerExpansion, t0: Rational) -> Fraction:
    """<f, g> with p_lam self-pairings z_lam prod 1/(1-t0^k)."""
    total = Fraction(0)
    for rho, fv in f.items():
        gv = g.get(rho)
        if not gv:
            continue
        weight = Fraction(z_factor(rho))
        for k in rho:
            den = 1 - Fraction(t0) ** k
            if den == 0:
                raise DegeneratePointError(f"1 - t0^{k} vanishes at t0 = {t0}")
            weight /= den
        total += fv * gv * weight
    return total


def _check_extension(n: int, order: tuple[Partition, ...]) -> None:
    if sorted(order) != sorted(partitions_of(n)):
        raise ValueError(f"order is not a permutation of the partitions of {n}")
    for i, lam in enumerate(order):
        for mu in order[i + 1 :]:
            if dominance_leq(mu, lam) and mu != lam:
                raise ValueError("order does not refine dominance")


@cache
def _orthogonal_basis(
    n: int, q0: Rational, t0: Rational, order: tuple[Partition, ...]
) -> dict[Partition, NumericSchur]:
    """Gram-Schmidt the Schur vectors of degree n along the given order.

    Ascending dominance-compatible order makes each output vector unitriangular:
    coordinate 1 on its own shape plus dominance-smaller terms only.
    """
    _check_extension(n, order)
    vecs: dict[Partition, NumericSchur] = {}
    powers: dict[Partition, PowerExpansion] = {}
    norms: dict[Partition, Fraction] = {}
    for lam in order:
        v = {lam: Fraction(1)}
        pv = dict(schur_to_power(lam))
        for mu, w in vecs.items():
            c = scalar_qt(pv, powers[mu], q0, t0) / norms[mu]
            if not c:
                continue
            for shape, coord in w.items():
                v[shape] = v.get(shape, Fraction(0)) - c * coord
            for rho, coord in powers[mu].items():
                pv[rho] = pv.get(rho, Fraction(0)) - c * coord
        v = {shape: coord for shape, coord in v.items() if coord}
        pv = {rho: coord for rho, coord in pv.items() if coord}
        norm = scalar_qt(pv, pv, q0, t0)
        if norm == 0:
            raise DegeneratePointError(f"zero norm at {lam} for point ({q0}, {t0})")
        vecs[lam] = v
        powers[lam] = pv
        norms[lam] = norm
    return vecs


def macdonald_oracle(
    mu: Partition,
    q0: Rational,
    t0: Rational,
    order: tuple[Partition, ...] | None = None,
) -> NumericSchur:
    """Numeric J_mu in Schur coordinates, from orthogonality alone.

    The Gram-Schmidt vector for mu is rescaled so that its s_mu coordinate is
    the hook product prod_{cells} (1 - q0^arm t0^(leg+1)).
    """
    n = sum(mu)
    if order is None:
        order = linear_extension(n)
    vecs = _orthogonal_basis(n, Fraction(q0), Fraction(t0), tuple(order))
    lead = Fraction(1)
    for row in range(1, len(mu) + 1):
        for col in range(1, mu[row - 1] + 1):
            arm, leg = arm_leg(mu, row, col)
            lead *= 1 - Fraction(q0) ** arm * Fraction(t0) ** (leg + 1)
    if lead == 0:
        raise DegeneratePointError(f"leading factor vanishes for {mu} at ({q0}, {t0})")
    return {lam: c * lead for lam, c in vecs[mu].items()}


def kostka_oracle(
    lam: Partition,
    mu: Partition,
    q0: Rational,
    t0: Rational,
    order: tuple[Partition, ...] | None = None,
) -> Fraction:
    """K_{lam,mu}(q0,t0) as <J_mu, s_lam> under the t-deformed pairing."""
    jmu = macdonald_oracle(mu, q0, t0, order)
    return scalar_t(power_coords(jmu), schur_to_power(lam), t0)


def kostka_foulkes(lam: Partition, mu: Partition) -> QTPoly:
    """Sum of t^charge over column-strict tableaux of shape lam, content mu."""
    if sum(lam) != sum(mu):
        raise ValueError("kostka_foulkes needs |lam| = |mu|")
    out = QTPoly.zero()
    for tab in column_strict_tableaux(mu, lam):
        out = out + QTPoly.t(tableau_charge(tab))
    return out


def count_syt(lam: Partition) -> int:
    """Number of standard tableaux of shape lam, by the hook-length product."""
    den = 1
    for row in range(1, len(lam) + 1):
        for col in range(1, lam[row - 1] + 1):
            arm, leg = arm_leg(lam, row, col)
            den *= arm + leg + 1
    num = factorial(sum(lam))
    if num % den:
        raise ArithmeticError(f"hook product does not divide |lam|! for {lam}")
    return num // den


def count_syt_enumerated(lam: Partition) -> int:
    """Number of standard tableaux of shape lam, by direct enumeration."""
    return len(standard_tableaux(lam))


def _draw_fraction(rng: random.Random) -> Fraction:
    v = rng.randint(3, 97)
    u = rng.randint(2, v - 1)
    return Fraction(u, v)


def generic_points(count: int, seed: int, max_n: int = 8) -> list[tuple[Fraction, Fraction]]:
    """Deterministic generic rational (q0, t0) pairs in (0, 1).

    Both coordinates are u/v with 2 <= u < v <= 97.  A pair is rejected when
    q0^i = t0^j for any exponents up to 2*max_n; with both values inside
    (0, 1) that is the only way any factor (1 - q^i t^j), including the
    negative-j ones hiding in the rational coefficient tables, can vanish.
    """
    rng = random.Random(seed)
    bound = 2 * max_n
    points: list[tuple[Fraction, Fraction]] = []
    while len(points) < count:
        q0 = _draw_fraction(rng)
        t0 = _draw_fraction(rng)
        if any(
            q0**i == t0**j for i in range(1, bound + 1) for j in range(1, bound + 1)
        ):
            continue
        if (q0, t0) in points:
            continue
        points.append((q0, t0))
    return points


def report_entry(check: str, params: dict, ok: bool, detail: str = "") -> dict:
    """One machine-readable battery line."""
    return {
        "check": check,
        "params": params,
        "status": "pass" if ok else "fail",
        "detail": detail,
    }


# ---------------------------------------------------------------------------
# Numeric evaluation of the rational-coefficient expansion tables.  The
# symbolic package never implements these (their denominators live outside
# polynomial arithmetic); here they are evaluated exactly at rational points
# and compared with the vertex-operator results.
# ---------------------------------------------------------------------------


def _c(x: int, y: int, i: int, q0: Fraction, t0: Fraction) -> Fraction:
    return stem_coefficient(x, y, i).evaluate(q0, t0)


def _gauss(n: int, k: int, q0: Fraction, t0: Fraction) -> Fraction:
    return gaussian_binomial(n, k).evaluate(q0, t0)


def _poch(q0: Fraction, t0: Fraction, start: int, length: int) -> Fraction:
    """prod_{j<length} (1 - q0 t0^(start+j)); start may be negative."""
    out = Fraction(1)
    for j in range(length):
        out *= 1 - q0 * t0 ** (start + j)
    return out


def _bracket_coefficient(x: int, y: int, i: int, q0: Fraction, t0: Fraction) -> Fraction:
    """Coefficient of H_(2^i 1^(3+2x+y-2i))[X;t] in H_(3 2^x 1^y)[X;q,t], 1 <= i <= x+2.

    The four summands are written with every removable pole cancelled, so the
    formula stays finite for i = x+1 and i = x+2 as well.
    """
    if not 1 <= i <= x + 2:
        return Fraction(0)
    common = q0 ** (x - i) * _poch(q0, t0, x + y - i + 1, i)
    h1 = 1 - t0 ** (x + 1)
    h2 = 1 - t0 ** (x + 2)
    head = 1 - q0**2 * t0 ** (x + y + 1)
    x1 = (
        common
        * _gauss(x + 1, i, q0, t0)
        / h1
        * head
        * (1 - q0 * t0 ** (x + 1))
        / (1 - q0 * t0 ** (x + y + 1 - i))
    )
    x2 = (
        common
        * _gauss(x + 2, i, q0, t0)
        / (h1 * h2)
        * head
        * (1 - q0 * t0 ** (x + 1))
        * (1 - t0**i)
        * (1 - t0 ** (2 * x + y + 4 - 2 * i))
        / ((1 - q0 * t0 ** (x + 1 + y - i)) * (1 - q0 * t0 ** (x + 2 + y - i)))
    )
    x3 = (
        common
        * _gauss(x + 2, i, q0, t0)
        / h1
        * head
        * (1 - t0**y)
        * (1 - q0)
        / ((1 - q0 * t0 ** (x + 1 + y - i)) * (1 - q0 * t0**y))
    )
    x4 = (
        common
        * _gauss(x + 1, i, q0, t0)
        / h1
        * (1 - q0**2 * t0**y)
        * (1 - q0 * t0 ** (x + 1))
        * (1 - q0)
        * (1 - q0 * t0 ** (x + y + 2))
        / (
            (1 - q0 * t0 ** (x + y + 2 - i))
            * (1 - q0 * t0 ** (x + 1 + y - i))
            * (1 - q0 * t0**y)
        )
    )
    return q0 * (x1 + q0 * x2 - q0 * x3 - x4)


def three_row_coefficients(a: int, b: int, q0: Fraction, t0: Fraction) -> NumericSchur:
    """Numeric HL-basis coefficients of H_(3 2^a 1^b)[X;q,t] from the rational table."""
    out: dict[Partition, Fraction] = {}
    head = (1 - q0**2 * t0 ** (a + b + 1)) * (1 - q0 * t0 ** (a + 1))
    for i in range(a + 1):
        shape = (3,) + (2,) * i + (1,) * (2 * a + b - 2 * i)
        out[shape] = _c(a, b, i, q0, t0) * head
    out[(1,) * (2 * a + b + 3)] = out.get((1,) * (2 * a + b + 3), Fraction(0)) + q0 ** (a + 3)
    for i in range(1, a + 3):
        ones = 2 * a + b + 3 - 2 * i
        if ones < 0:
            continue
        shape = (2,) * i + (1,) * ones
        out[shape] = out.get(shape, Fraction(0)) + _bracket_coefficient(a, b, i, q0, t0)
    return {shape: v for shape, v in out.items() if v}


def _three_row_entry(x: int, y: int, i: int, q0: Fraction, t0: Fraction) -> Fraction:
    """Coefficient of H_(2^i 1^(3+2x+y-2i)) in H_(3 2^x 1^y)[X;q,t], any i."""
    if i == 0:
        return q0 ** (x + 3)
    return _bracket_coefficient(x, y, i, q0, t0)


def four_row_coefficients(a: int, b: int, q0: Fraction, t0: Fraction) -> NumericSchur:
    """Numeric HL-basis coefficients of H_(4 2^a 1^b)[X;q,t] from the rational table."""
    q, t = Fraction(q0), Fraction(t0)
    qq = q * q
    top = (1 - q**3 * t ** (a + b + 1)) * (1 - qq * t ** (a + 1))
    a_p = -(
        (1 - q)
        * (1 - qq)
        * top
        / (
            (1 - qq * t ** (a + b + 1))
            * (1 - q * t ** (a + 1))
            * (1 - t ** (a + 1))
            * (1 - q * t ** (a + b + 1))
        )
    )
    b_p = -(
        (1 - t**b)
        * (1 - qq)
        * (1 - q**3 * t ** (a + b + 1))
        / ((1 - q * t**b) * (1 - qq * t ** (a + b + 1)) * (1 - t ** (a + 1)))
    )
    c_p = -(
        (1 - qq * t**b)
        * (1 - qq)
        * (1 - qq * t ** (a + 1))
        / ((1 - q * t**b) * (1 - q * t ** (a + 1)) * (1 - q * t ** (a + b + 1)))
    )
    e_p = top / ((1 - t ** (a + 1)) * (1 - q * t ** (a + b + 1)))

    def c1(i: int) -> Fraction:
        return _c(a + 1, b, i, q, t)

    def d(x: int, y: int, i: int) -> Fraction:
        return _c(x, y, i, q, t) * (1 - qq * t ** (x + y + 1)) * (1 - q * t ** (x + 1))

    n4 = 4 + 2 * a + b
    out: dict[Partition, Fraction] = {}
    for i in range(n4 // 2 + 1):
        ones = n4 - 2 * i
        v = a_p * _c(a + 2, b, i, q, t)
        if b >= 1:
            v += b_p * _three_row_entry(a + 1, b - 1, i, q, t)
        v += c_p * _three_row_entry(a, b + 1, i, q, t)
        v += e_p * (1 - q) * c1(i - 1)
        v += (
            q
            * e_p
            * (
                c1(i)
                + (2 - t ** (2 * a + b - 2 * i + 5) - t ** (2 * a + b - 2 * i + 4)) * c1(i - 1)
                + (1 - t ** (2 * a + b - 2 * i + 6))
                * (1 - t ** (2 * a + b - 2 * i + 5))
                * c1(i - 2)
            )
        )
        if v:
            out[(2,) * i + (1,) * ones] = v
    for i in range((1 + 2 * a + b) // 2 + 1):
        ones = 1 + 2 * a + b - 2 * i
        v = Fraction(0)
        if b >= 1:
            v += b_p * d(a + 1, b - 1, i)
        v += c_p * d(a, b + 1, i)
        v += (
            e_p
            * (1 - q)
            * ((1 - t ** (2 * a + b + 2 - 2 * i)) * c1(i) + (1 - t ** (i + 1)) * c1(i + 1))
        )
        v += (
            q
            * e_p
            * (
                2 * (1 - t ** (i + 1)) * c1(i + 1)
                + (1 - t ** (2 * a + b + 2 - 2 * i)) * (2 - t ** (i + 1) - t**i) * c1(i)
            )
        )
        if v:
            out[(3,) + (2,) * i + (1,) * ones] = v
    for i in range((2 * a + b - 2) // 2 + 1) if 2 * a + b >= 2 else ():
        ones = 2 * a + b - 2 * i - 2
        v = q * e_p * (1 - t ** (i + 2)) * (1 - t ** (i + 1)) * c1(i + 2)
        if v:
            out[(3, 3) + (2,) * i + (1,) * ones] = v
    for i in range((2 * a + b) // 2 + 1):
        ones = 2 * a + b - 2 * i
        v = e_p * (1 - t ** (i + 1)) * (1 - q * t) * c1(i + 1)
        if v:
            out[(4,) + (2,) * i + (1,) * ones] = v
    return out


def _assemble_schur(coeffs: NumericSchur, q0: Fraction, t0: Fraction) -> NumericSchur:
    """Substitute each H_nu[X;t] with its charge expansion, numerically."""
    out: dict[Partition, Fraction] = {}
    for nu, c in coeffs.items():
        if not c:
            continue
        for lam in partitions_of(sum(nu)):
            k = kostka_foulkes(lam, nu)
            if k:
                out[lam] = out.get(lam, Fraction(0)) + c * k.evaluate(q0, t0)
    return {lam: v for lam, v in out.items() if v}


def _macdonald_at(mu: Partition, q0: Fraction, t0: Fraction) -> NumericSchur:
    f = macdonald(mu)
    out = {}
    for lam, c in f.terms():
        v = c.evaluate(q0, t0)
        if v:
            out[lam] = v
    return out


def _coef_lemma_failures(a: int, b: int, q0: Fraction, t0: Fraction) -> list[str]:
    bad = []
    for x in range(1, a + 3):
        for y in range(b + 2):
            for z in range(x):
                c_now = _c(x, y, z, q0, t0)
                if y >= 1:
                    lhs = _c(x, y - 1, z, q0, t0) * (1 - q0 * t0 ** (x + y)) / (
                        1 - q0 * t0 ** (x + y - z)
                    )
                    if c_now != lhs:
                        bad.append(f"coef2 x={x} y={y} z={z}")
                lhs = (
                    _c(x, y, z + 1, q0, t0)
                    * q0
                    * (1 - t0 ** (z + 1))
                    / ((1 - t0 ** (x - z)) * (1 - q0 * t0 ** (x + y - z)))
                )
                if c_now != lhs:
                    bad.append(f"coef3 x={x} y={y} z={z}")
                lhs = (
                    _c(x - 1, y, z, q0, t0)
                    * q0
                    * (1 - q0 * t0 ** (x + y))
                    * (1 - t0**x)
                    / ((1 - q0 * t0 ** (x + y - z)) * (1 - t0 ** (x - z)))
                )
                if c_now != lhs:
                    bad.append(f"coef4 x={x} y={y} z={z}")
    return bad


def _pieri_failures(a: int, b: int, q0: Fraction, t0: Fraction) -> list[str]:
    """e_1 H_(2^(a+1) 1^b) against its stated three-term decomposition."""
    n = 2 * a + b + 3
    lhs = _macdonald_at_mul_e(a, b, q0, t0)
    coeff_a = (
        (1 - t0 ** (a + 1))
        * (1 - q0 * t0 ** (a + b + 1))
        / ((1 - q0**2 * t0 ** (a + b + 1)) * (1 - q0 * t0 ** (a + 1)))
    )
    coeff_c = (
        (1 - q0)
        * (1 - q0**2 * t0**b)
        / ((1 - q0 * t0**b) * (1 - q0**2 * t0 ** (a + b + 1)))
    )
    rhs: dict[Partition, Fraction] = {}
    for lam, v in _macdonald_at((3,) + (2,) * a + (1,) * b, q0, t0).items():
        rhs[lam] = rhs.get(lam, Fraction(0)) + coeff_a * v
    if b >= 1:
        coeff_b = (
            (1 - t0**b)
            * (1 - q0)
            / ((1 - q0 * t0**b) * (1 - q0 * t0 ** (a + 1)))
        )
        for lam, v in _macdonald_at((2,) * (a + 2) + (1,) * (b - 1), q0, t0).items():
            rhs[lam] = rhs.get(lam, Fraction(0)) + coeff_b * v
    for lam, v in _macdonald_at((2,) * (a + 1) + (1,) * (b + 1), q0, t0).items():
        rhs[lam] = rhs.get(lam, Fraction(0)) + coeff_c * v
    rhs = {lam: v for lam, v in rhs.items() if v}
    bad = []
    for lam in partitions_of(n):
        if lhs.get(lam, Fraction(0)) != rhs.get(lam, Fraction(0)):
            bad.append(f"lam={lam}")
    return bad


def _macdonald_at_mul_e(a: int, b: int, q0: Fraction, t0: Fraction) -> NumericSchur:
    f = mul_e(1, macdonald((2,) * (a + 1) + (1,) * b))
    out = {}
    for lam, c in f.terms():
        v = c.evaluate(q0, t0)
        if v:
            out[lam] = v
    return out


def verify_rational_props(a: int, b: int, points: list[tuple[Fraction, Fraction]]) -> list[dict]:
    """Check the rational-coefficient expansion tables at the given points.

    Covers the three coefficient recurrences, the three-row and four-row
    HL-basis tables assembled into Schur coordinates via charge, and the e_1
    three-term Pieri decomposition.  All arithmetic is exact.
    """
    entries = []
    for q0, t0 in points:
        q0, t0 = Fraction(q0), Fraction(t0)
        tag = {"a": a, "b": b, "q0": str(q0), "t0": str(t0)}
        bad = _coef_lemma_failures(a, b, q0, t0)
        entries.append(
            report_entry("rational/coefficient-recurrences", tag, not bad, "; ".join(bad))
        )
        if 3 + 2 * a + b <= 8:
            got = _assemble_schur(three_row_coefficients(a, b, q0, t0), q0, t0)
            want = _macdonald_at((3,) + (2,) * a + (1,) * b, q0, t0)
            entries.append(
                report_entry(
                    "rational/three-row-table",
                    tag,
                    got == want,
                    "" if got == want else f"got {got} want {want}",
                )
            )
            bad = _pieri_failures(a, b, q0, t0)
            entries.append(
                report_entry("rational/e1-decomposition", tag, not bad, "; ".join(bad))
            )
        if 4 + 2 * a + b <= 8:
            got = _assemble_schur(four_row_coefficients(a, b, q0, t0), q0, t0)
            want = _macdonald_at((4,) + (2,) * a + (1,) * b, q0, t0)
            entries.append(
                report_entry(
                    "rational/four-row-table",
                    tag,
                    got == want,
                    "" if got == want else f"got {got} want {want}",
                )
            )
    return entries
