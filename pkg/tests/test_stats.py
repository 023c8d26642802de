import pytest

from qtkostka.partitions import horizontal_strips, partitions_of
from qtkostka.stats import (
    HEAD_TABLE,
    TypeSequence,
    add_col_block,
    add_row_block,
    classify_pair,
    delete_prefix,
    full_type,
    head_tableau,
    inverse_col_block,
    inverse_row_block,
    is_unimodal,
    pair_involution,
    parse_type_sequence,
    stat_genfun,
    stat_pair,
    type_two_col,
    unbuild,
    unimodal_profile,
)
from qtkostka.tableaux import parse_tableau, standard_tableaux
from qtkostka.vertex import macdonald

T = parse_tableau


def test_head_table_shape():
    assert len(HEAD_TABLE) == 14
    assert HEAD_TABLE[T("1,2,3")] == (3, 2, (0, 3), 0)
    assert HEAD_TABLE[T("1,3/2")] == (1, 1, (1, 2), 1)
    assert HEAD_TABLE[T("1,2/3")] == (2, 1, (1, 2), 2)
    assert HEAD_TABLE[T("1/2/3")] == (0, 0, (0, 3), 3)
    assert HEAD_TABLE[T("1,2,3,4")] == (6, 3, (0, 4), 0)
    assert HEAD_TABLE[T("1,3/2,4")] == (2, 1, (2, 2), 4)
    assert HEAD_TABLE[T("1/2/3/4")] == (0, 0, (0, 4), 6)


def test_head_tableau():
    assert head_tableau(T("1,4,5/2,6/3"), 3) == T("1/2/3")
    assert head_tableau(T("1,2,4/3"), 3) == T("1,2/3")
    assert head_tableau(T("1,2,4/3"), 1) == T("1")


def test_delete_prefix():
    assert delete_prefix(1, T("1,2,4/3")) == T("1,3/2")
    assert delete_prefix(0, T("1,3/2")) == T("1,3/2")
    assert delete_prefix(3, T("1,2,3")) == ()


def test_row_block_examples():
    assert add_row_block(2, (11, 3), T("1,3,5,6/2,4")) == T("1,2,4,6,7/3,5,8")
    assert add_row_block(2, (8, 3, 1), T("1,2,3/4/5")) == T("1,2,5,7/3,4/6")
    assert inverse_row_block(2, (11, 3), T("1,2,4,6,7/3,5,8")) == T("1,3,5,6/2,4")


def test_col_block_example():
    built = add_col_block(2, (4, 3, 1, 1, 1, 1, 1, 1, 1), T("1,3,5,6/2,4"))
    assert built == T("1,3,5,7/2,4,6/8")
    assert inverse_col_block(2, (4, 3, 1, 1, 1, 1, 1, 1, 1), built) == T("1,3,5,6/2,4")


def test_unbuild_chain():
    assert unbuild(2, T("1,4,5/2,6/3")) == T("1,3/2/4")
    assert unbuild(2, T("1,3/2/4")) == T("1,2")
    assert unbuild(2, T("1,2")) == ()


def test_type_two_col():
    assert type_two_col(T("1,4,5/2,6/3"), 3).blocks == ("V", "V", "H")
    assert type_two_col(T("1,2"), 1).blocks == ("H",)
    assert type_two_col(T("1/2"), 1).blocks == ("V",)


def test_full_type():
    kind = full_type((2, 2, 2), T("1,4,5/2,6/3"))
    assert kind.blocks == ("V", "V", "H")
    assert kind.head is None
    head_kind = full_type((3, 2, 1), T("1,2,3/4,5/6"))
    assert head_kind.head == T("1,2,3")
    assert len(head_kind.blocks) == 2 and head_kind.blocks[1] == "S"


def test_type_sequence_text_round_trip():
    kind = TypeSequence(T("1,3/2"), ("V", "H", "S"))
    assert kind.text() == "(1,3/2)|V,H,S"
    assert parse_type_sequence("(1,3/2)|V,H,S") == kind
    bare = TypeSequence(None, ("H", "V"))
    assert parse_type_sequence(bare.text()) == bare


def test_stat_pair_examples():
    assert stat_pair((2, 1), T("1,3/2")) == (1, 1)
    assert stat_pair((2, 1), T("1,2/3")) == (0, 0)
    assert stat_pair((3,), T("1,2/3")) == (0, 2)
    assert stat_pair((3,), T("1,2,3")) == (0, 0)
    assert stat_pair((3,), T("1/2/3")) == (0, 3)


def test_stat_pair_rejects_size_mismatch():
    with pytest.raises(ValueError):
        stat_pair((2, 1), T("1,2"))


def test_stat_genfun_small():
    assert stat_genfun((2, 1)) == macdonald((2, 1))
    assert stat_genfun((1, 1)) == macdonald((1, 1))
    assert stat_genfun((3, 2)) == macdonald((3, 2))
    assert stat_genfun((4, 1)) == macdonald((4, 1))


def test_involution_example():
    tab, rho = T("1,2,3/4/5"), (8, 3, 1)
    assert classify_pair(5, 2, tab, rho) == "unstable"
    that, flipped = pair_involution(5, 2, tab, rho)
    assert that == T("1,2,3,5/4")
    assert flipped == (7, 4, 1)
    assert pair_involution(5, 2, that, flipped) == (tab, rho)
    assert full_type((2, 2, 1), that).blocks == full_type((2, 2, 1), tab).blocks


def test_involution_needs_unstable():
    for lam in partitions_of(3):
        for tab in standard_tableaux(lam):
            for rho in horizontal_strips(lam, 5):
                if classify_pair(3, 2, tab, rho) != "unstable":
                    with pytest.raises(ValueError):
                        pair_involution(3, 2, tab, rho)


def test_every_built_tableau_has_a_stable_preimage():
    # n = 2, m = 2: the generating-function argument needs each surviving
    # term to be produced by exactly one stable pair
    n, m = 2, 2
    stable_images = {}
    for lam in partitions_of(n):
        for tab in standard_tableaux(lam):
            for rho in horizontal_strips(lam, n + m):
                if classify_pair(n, m, tab, rho) == "stable":
                    built = add_row_block(m, rho, tab)
                    stable_images.setdefault(built, []).append((tab, rho))
    assert stable_images
    for built, pairs in stable_images.items():
        assert len(pairs) == 1
        tab, rho = pairs[0]
        assert unbuild(m, built) == tab


def test_is_unimodal():
    assert is_unimodal((1, 2, 3, 2, 1))
    assert is_unimodal((1, 1, 1))
    assert is_unimodal(())
    assert is_unimodal((0, 0, 2, 7, 12, 14, 13, 9, 4, 2))
    assert not is_unimodal((2, 1, 2))
    assert not is_unimodal((1, 3, 2, 3))


def test_unimodal_profile_printed_rows():
    profile = unimodal_profile((3, 1, 1, 1))
    assert profile[TypeSequence(T("1,2,3"), ("S", "S", "S"))] == (1, 2, 3, 4, 2, 1, 1)
    assert profile[TypeSequence(T("1/2/3"), ("S", "S", "S"))] == (1, 1, 2, 4, 3, 2, 1)
    total = sum(sum(seq) for seq in profile.values())
    from qtkostka.tableaux import all_standard_tableaux

    assert total == len(all_standard_tableaux(6))
