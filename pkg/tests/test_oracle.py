from fractions import Fraction

import pytest

from qtkostka.oracle import (
    DegeneratePointError,
    character,
    count_syt,
    count_syt_enumerated,
    generic_points,
    kostka_foulkes,
    kostka_oracle,
    macdonald_oracle,
    power_coords,
    report_entry,
    scalar_qt,
    scalar_t,
    schur_to_power,
    verify_rational_props,
    z_factor,
)
from qtkostka.partitions import linear_extension, partitions_of
from qtkostka.qtpoly import QTPoly
from qtkostka.vertex import hall_littlewood, macdonald

F = Fraction
Q0, T0 = F(1, 3), F(1, 2)


def test_z_factor():
    assert z_factor(()) == 1
    assert z_factor((1, 1, 1)) == 6
    assert z_factor((2, 1)) == 2
    assert z_factor((3,)) == 3
    assert z_factor((2, 2)) == 8
    assert z_factor((4, 4, 2, 1, 1)) == 4 * 4 * 2 * 2 * 2


def test_character_table_degree_three():
    classes = ((1, 1, 1), (2, 1), (3,))
    assert [character((3,), c) for c in classes] == [1, 1, 1]
    assert [character((2, 1), c) for c in classes] == [2, 0, -1]
    assert [character((1, 1, 1), c) for c in classes] == [1, -1, 1]


def test_character_square():
    classes = ((1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,))
    assert [character((2, 2), c) for c in classes] == [2, 0, 2, -1, 0]


def test_character_orthogonality():
    for n in range(1, 7):
        shapes = partitions_of(n)
        for lam in shapes:
            for mu in shapes:
                total = sum(
                    F(character(lam, rho) * character(mu, rho), z_factor(rho))
                    for rho in shapes
                )
                assert total == (1 if lam == mu else 0)


def test_schur_to_power():
    assert schur_to_power((2,)) == {(2,): F(1, 2), (1, 1): F(1, 2)}
    assert schur_to_power((1, 1)) == {(2,): F(-1, 2), (1, 1): F(1, 2)}
    assert schur_to_power((2, 1)) == {(3,): F(-1, 3), (1, 1, 1): F(1, 3)}


def test_power_coords_is_linear():
    mixed = power_coords({(2,): F(1), (1, 1): F(1)})
    assert mixed == {(1, 1): F(1)}  # s_2 + s_11 = h_1^2 = p_1^2


def test_scalar_qt_on_p1():
    p1 = power_coords({(1,): F(1)})
    assert scalar_qt(p1, p1, Q0, T0) == (1 - Q0) / (1 - T0)


def test_scalar_t_on_p11():
    p11 = {(1, 1): F(1)}
    assert scalar_t(p11, p11, T0) == 2 / (1 - T0) ** 2


def test_schur_orthonormal_at_q_equals_t():
    # the pairing weights collapse to z_rho, the classical Hall pairing
    for lam in partitions_of(4):
        for mu in partitions_of(4):
            v = scalar_qt(schur_to_power(lam), schur_to_power(mu), T0, T0)
            assert v == (1 if lam == mu else 0)


def test_scalar_degenerate_points():
    p1 = {(1,): F(1)}
    p2 = {(2,): F(1)}
    with pytest.raises(DegeneratePointError):
        scalar_t(p1, p1, F(1))
    with pytest.raises(DegeneratePointError):
        scalar_qt(p2, p2, Q0, F(-1))  # 1 - t0^2 = 0


def test_oracle_degenerate_points():
    with pytest.raises(DegeneratePointError):
        macdonald_oracle((2,), Q0, F(1))
    # q0*t0 = 1 zeroes the Gram-Schmidt norm in degree 2
    with pytest.raises(DegeneratePointError):
        macdonald_oracle((2,), F(1, 2), F(2))
    with pytest.raises(DegeneratePointError):
        kostka_oracle((2,), (2,), Q0, F(1))


def test_extension_is_validated():
    descending = ((3,), (2, 1), (1, 1, 1))
    with pytest.raises(ValueError):
        macdonald_oracle((2, 1), Q0, T0, order=descending)
    repeated = ((2, 1), (2, 1), (1, 1, 1))
    with pytest.raises(ValueError):
        macdonald_oracle((2, 1), Q0, T0, order=repeated)


def test_extension_independence():
    # first dominance-incomparable pair lives at degree 6
    base = linear_extension(6)
    i = base.index((2, 2, 2))
    assert base[i + 1] == (3, 1, 1, 1)
    swapped = base[:i] + (base[i + 1], base[i]) + base[i + 2 :]
    for lam in ((3, 2, 1), (2, 2, 2)):
        a = kostka_oracle(lam, (2, 2, 1, 1), Q0, T0)
        b = kostka_oracle(lam, (2, 2, 1, 1), Q0, T0, order=swapped)
        assert a == b


def test_kostka_oracle_column():
    assert kostka_oracle((3,), (2, 1), Q0, T0) == T0
    assert kostka_oracle((2, 1), (2, 1), Q0, T0) == 1 + Q0 * T0
    assert kostka_oracle((1, 1, 1), (2, 1), Q0, T0) == Q0


def test_oracle_matches_vertex_output():
    for n in range(1, 5):
        for mu in partitions_of(n):
            f = macdonald(mu)
            for lam in partitions_of(n):
                want = f.coefficient(lam).evaluate(Q0, T0)
                assert kostka_oracle(lam, mu, Q0, T0) == want


def test_kostka_foulkes_values():
    one = QTPoly.one()
    t = QTPoly.t
    assert kostka_foulkes((1, 1, 1), (1, 1, 1)) == one
    assert kostka_foulkes((2, 1), (1, 1, 1)) == t(1) + t(2)
    assert kostka_foulkes((3,), (1, 1, 1)) == t(3)
    assert kostka_foulkes((3,), (2, 1)) == t(1)
    assert kostka_foulkes((2, 1), (2, 1)) == one
    assert kostka_foulkes((1, 1), (2,)) == QTPoly.zero()
    with pytest.raises(ValueError):
        kostka_foulkes((2,), (1, 1, 1))


def test_kostka_foulkes_matches_hall_littlewood():
    for n in range(1, 6):
        for mu in partitions_of(n):
            f = hall_littlewood(mu)
            for lam in partitions_of(n):
                assert f.coefficient(lam) == kostka_foulkes(lam, mu)


def test_count_syt():
    assert count_syt((3, 2)) == 5
    assert count_syt((4, 2)) == 9
    assert count_syt((2, 2, 1)) == 5
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert count_syt(lam) == count_syt_enumerated(lam)


def test_generic_points_deterministic_and_generic():
    pts = generic_points(5, seed=123)
    assert pts == generic_points(5, seed=123)
    assert len(pts) == 5
    for q0, t0 in pts:
        assert 0 < q0 < 1 and 0 < t0 < 1
        for i in range(1, 17):
            for j in range(1, 17):
                assert q0**i != t0**j
    assert generic_points(5, seed=124) != pts


def test_report_entry_shape():
    good = report_entry("some/check", {"n": 3}, True)
    assert good == {"check": "some/check", "params": {"n": 3}, "status": "pass", "detail": ""}
    bad = report_entry("some/check", {}, False, "mismatch at (2,1)")
    assert bad["status"] == "fail"
    assert bad["detail"] == "mismatch at (2,1)"


def test_rational_tables_at_generic_points():
    entries = verify_rational_props(1, 0, generic_points(2, seed=7))
    assert entries
    assert all(e["status"] == "pass" for e in entries)
