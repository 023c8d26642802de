import pytest

from qtkostka.tableaux import (
    all_standard_tableaux,
    charge,
    column_insert,
    column_strict_tableaux,
    conjugate_tableau,
    content,
    format_tableau,
    is_standard,
    is_tableau,
    parse_tableau,
    reading_word,
    rectify,
    reverse_column_insert,
    reverse_row_insert,
    row_insert,
    shape,
    standard_subwords,
    standard_tableaux,
    tableau_charge,
)

T = parse_tableau


def test_parse_format_round_trip():
    text = "1,3,5,6/2,4"
    assert format_tableau(T(text)) == text
    assert T(text) == ((1, 3, 5, 6), (2, 4))
    assert shape(T(text)) == (4, 2)
    assert T("") == ()


def test_validity():
    assert is_tableau(T("1,1,2/2,3"))
    assert not is_tableau(((1, 2), (1, 3)))  # column repeats
    assert is_standard(T("1,3/2"))
    assert not is_standard(T("1,1,2/2,3"))
    with pytest.raises(ValueError):
        T("1,2/1,3")


def test_reading_word():
    # rows read top to bottom, bottom row last
    assert reading_word(T("1,3,5,6/2,4")) == (2, 4, 1, 3, 5, 6)
    assert reading_word(()) == ()


def test_content():
    assert content((2, 1, 1, 3, 2)) == (2, 2, 1)
    assert content(()) == ()


def test_standard_subwords_example():
    word = (7, 3, 4, 6, 2, 2, 3, 5, 1, 1, 1, 2, 4, 8)
    subs = standard_subwords(word)
    assert sorted(subs) == sorted([(7, 3, 6, 2, 5, 1, 4, 8), (4, 2, 3, 1), (1, 2)])
    assert [charge(s) for s in subs] == [6, 2, 1]


def test_charge():
    word = (7, 3, 4, 6, 2, 2, 3, 5, 1, 1, 1, 2, 4, 8)
    assert charge(word) == 9
    assert charge(()) == 0
    assert charge((1, 2, 3)) == 3
    assert charge((3, 2, 1)) == 0
    # charge of the reading word of the unique row tableau is maximal
    assert tableau_charge(T("1,2,3,4")) == 6
    assert tableau_charge(T("1/2/3/4")) == 0
    with pytest.raises(ValueError):
        charge((2, 2, 1))  # content (1,2) is not a partition


def test_row_insert():
    tab = T("1,3,5,6/2,4")
    assert row_insert(tab, 4) == ((1, 3, 4, 6), (2, 4, 5))
    assert row_insert((), 2) == ((2,),)


def test_column_insert():
    # bumped entries move to the next column, settling at the lowest slot
    assert column_insert(T("1,3/2"), 1) == ((1, 1, 3), (2,))
    assert column_insert(T("1,3/2"), 4) == ((1, 3), (2,), (4,))
    assert column_insert(T("1,3/2"), 2) == ((1, 2, 3), (2,))
    assert column_insert((), 5) == ((5,),)


def test_reverse_row_insert():
    tab = T("1,3,5,6/2,4")
    bigger = row_insert(tab, 4)
    rest, letter = reverse_row_insert(bigger, (2, 3))
    assert (rest, letter) == (tab, 4)
    with pytest.raises(ValueError):
        reverse_row_insert(bigger, (1, 1))  # not a corner


def test_row_insert_round_trip_everywhere():
    for tab in all_standard_tableaux(5):
        for x in range(1, 7):
            grown = row_insert(tab, x)
            sh, old = shape(grown), shape(tab)
            corner = next(
                (r + 1, sh[r]) for r in range(len(sh)) if sh[r] != (old[r] if r < len(old) else 0)
            )
            assert reverse_row_insert(grown, corner) == (tab, x)


def test_column_insert_round_trip_everywhere():
    # letters doubled so the inserted odd letter never collides
    for tab in all_standard_tableaux(5):
        doubled = tuple(tuple(2 * x for x in row) for row in tab)
        for x in (1, 3, 5, 7, 9, 11):
            grown = column_insert(doubled, x)
            sh, old = shape(grown), shape(doubled)
            corner = next(
                (r + 1, sh[r]) for r in range(len(sh)) if sh[r] != (old[r] if r < len(old) else 0)
            )
            assert reverse_column_insert(grown, corner) == (doubled, x)


def test_rectify():
    assert rectify((2, 4, 1, 3, 5, 6)) == T("1,3,5,6/2,4")
    assert rectify((3, 2, 1)) == ((1,), (2,), (3,))


def test_conjugate_tableau():
    assert conjugate_tableau(T("1,2/3")) == ((1, 3), (2,))
    for tab in all_standard_tableaux(5):
        image = conjugate_tableau(tab)
        assert shape(image) == tuple(
            sum(1 for row in tab if len(row) > c) for c in range(len(tab[0]))
        ) if tab else image == ()
        assert conjugate_tableau(image) == tab


def test_standard_tableaux_counts():
    assert len(standard_tableaux((2, 1))) == 2
    assert len(standard_tableaux((3, 2))) == 5
    assert len(standard_tableaux((2, 2, 1))) == 5
    assert standard_tableaux(()) == ((),)
    assert len(all_standard_tableaux(4)) == 10
    for tab in standard_tableaux((3, 2)):
        assert is_standard(tab) and shape(tab) == (3, 2)


def test_column_strict_tableaux():
    # K_{(2,1),(1,1,1)} = 2 semistandard fillings
    assert len(column_strict_tableaux((1, 1, 1), (2, 1))) == 2
    # weight (2,1): shapes (3) and (2,1) only
    tabs = column_strict_tableaux((2, 1))
    assert {shape(t) for t in tabs} == {(3,), (2, 1)}
    for tab in column_strict_tableaux((2, 2)):
        assert content(reading_word(tab)) == (2, 2)
        assert is_tableau(tab)
