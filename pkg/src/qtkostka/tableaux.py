"""Words, Young tableaux, charge, and the insertion algorithms.

Tableaux are tuples of rows, bottom row first, each row a tuple of
positive integers.  Rows weakly increase, columns strictly increase
upward.  The reading word lists rows left to right starting with the
top row, so the bottom row is read last.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from functools import cache
from typing import Iterable, Optional

from .partitions import (
    Partition,
    contains,
    horizontal_strips,
    is_partition,
    partitions_of,
)

Word = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def parse_tableau(text: str) -> Tableau:
    """Parse rows separated by '/', bottom row first, entries comma-separated."""
    text = text.strip()
    if not text:
        return ()
    rows = []
    for chunk in text.split("/"):
        try:
            rows.append(tuple(int(piece) for piece in chunk.split(",")))
        except ValueError:
            raise ValueError(f"cannot parse tableau row {chunk!r}") from None
    result = tuple(rows)
    if not is_tableau(result):
        raise ValueError(f"{text!r} is not a column-strict tableau")
    return result


def format_tableau(tab: Tableau) -> str:
    return "/".join(",".join(str(x) for x in row) for row in tab)


def shape(tab: Tableau) -> Partition:
    return tuple(len(row) for row in tab)


def is_tableau(tab: Tableau) -> bool:
    """Partition shape, rows weakly increasing, columns strictly increasing."""
    if not is_partition(shape(tab)) and tab != ():
        return False
    for row in tab:
        if any(x <= 0 for x in row):
            return False
        if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
            return False
    for r in range(len(tab) - 1):
        upper, lower = tab[r + 1], tab[r]
        if any(upper[c] <= lower[c] for c in range(len(upper))):
            return False
    return True


def is_standard(tab: Tableau) -> bool:
    if not is_tableau(tab):
        return False
    letters = sorted(x for row in tab for x in row)
    return letters == list(range(1, len(letters) + 1))


def reading_word(tab: Tableau) -> Word:
    out: list[int] = []
    for row in reversed(tab):
        out.extend(row)
    return tuple(out)


def content(word: Iterable[int]) -> tuple[int, ...]:
    """Multiplicity vector of the letters 1..max(word)."""
    letters = tuple(word)
    if not letters:
        return ()
    top = max(letters)
    if min(letters) < 1:
        raise ValueError("letters must be positive")
    counts = [0] * top
    for x in letters:
        counts[x - 1] += 1
    return tuple(counts)


def standard_subwords(word: Word) -> list[Word]:
    """Decompose a word of partition content into standard subwords.

    Scanning right to left, mark the first 1, then the first 2 to its
    left, and so on, wrapping around to the right end whenever the left
    end is passed; the marked letters form one standard subword, which
    is removed before repeating.
    """
    remaining = list(enumerate(word))
    if remaining and not is_partition(content(word)):
        raise ValueError(f"content of {word} is not a partition")
    subwords: list[Word] = []
    while remaining:
        top = max(letter for _, letter in remaining)
        marked: list[int] = []
        cursor = len(remaining) - 1
        for target in range(1, top + 1):
            steps = 0
            while remaining[cursor][1] != target:
                cursor -= 1
                if cursor < 0:
                    cursor = len(remaining) - 1
                steps += 1
                if steps > len(remaining):
                    raise ValueError(f"letter {target} missing in {word}")
            marked.append(cursor)
            cursor -= 1
            if cursor < 0:
                cursor = len(remaining) - 1
        picked = sorted(marked)
        subwords.append(tuple(remaining[i][1] for i in picked))
        for i in reversed(picked):
            del remaining[i]
    return subwords


def _standard_charge(word: Word) -> int:
    position = {letter: i for i, letter in enumerate(word)}
    index = 0
    total = 0
    for letter in range(2, len(word) + 1):
        if position[letter] > position[letter - 1]:
            index += 1
        total += index
    return total


def charge(word: Iterable[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content."""
    w = tuple(word)
    if not w:
        return 0
    return sum(_standard_charge(sub) for sub in standard_subwords(w))


def tableau_charge(tab: Tableau) -> int:
    return charge(reading_word(tab))


def row_insert(tab: Tableau, x: int) -> Tableau:
    """Schensted row insertion: x bumps the leftmost entry strictly greater."""
    rows = [list(row) for row in tab]
    current = x
    for row in rows:
        j = bisect_right(row, current)
        if j == len(row):
            row.append(current)
            current = -1
            break
        row[j], current = current, row[j]
    if current != -1:
        rows.append([current])
    return tuple(tuple(row) for row in rows)


def column_insert(tab: Tableau, x: int) -> Tableau:
    """Column insertion: x bumps the lowest entry >= x of each column in turn."""
    rows = [list(row) for row in tab]
    current = x
    col = 0
    while True:
        bumped = False
        for row in rows:
            if len(row) > col and row[col] >= current:
                row[col], current = current, row[col]
                bumped = True
                break
        if not bumped:
            for row in rows:
                if len(row) == col:
                    row.append(current)
                    break
            else:
                rows.append([current])
            return tuple(tuple(row) for row in rows)
        col += 1


def reverse_row_insert(tab: Tableau, cell: tuple[int, int]) -> tuple[Tableau, int]:
    """Undo a row insertion ending at the given corner; returns (rest, letter)."""
    r, c = cell
    sh = shape(tab)
    if not (1 <= r <= len(sh) and sh[r - 1] == c and (r == len(sh) or sh[r] < c)):
        raise ValueError(f"({r},{c}) is not a removable corner of {sh}")
    rows = [list(row) for row in tab]
    current = rows[r - 1].pop()
    for i in range(r - 2, -1, -1):
        row = rows[i]
        j = bisect_left(row, current) - 1
        if j < 0:
            raise ValueError("reverse row insertion fell off a row")
        row[j], current = current, row[j]
    return tuple(tuple(row) for row in rows if row), current


def reverse_column_insert(tab: Tableau, cell: tuple[int, int]) -> tuple[Tableau, int]:
    """Undo a column insertion ending at the given corner; returns (rest, letter)."""
    r, c = cell
    sh = shape(tab)
    if not (1 <= r <= len(sh) and sh[r - 1] == c and (r == len(sh) or sh[r] < c)):
        raise ValueError(f"({r},{c}) is not a removable corner of {sh}")
    rows = [list(row) for row in tab]
    current = rows[r - 1].pop()
    for col in range(c - 2, -1, -1):
        column = [row[col] for row in rows if len(row) > col]
        j = bisect_left(column, current) - 1
        if j < 0:
            raise ValueError("reverse column insertion fell off a column")
        rows[j][col], current = current, rows[j][col]
    return tuple(tuple(row) for row in rows if row), current


def rectify(word: Iterable[int]) -> Tableau:
    """The unique tableau whose reading word is Knuth equivalent to word."""
    tab: Tableau = ()
    for letter in word:
        tab = row_insert(tab, letter)
    return tab


def conjugate_tableau(tab: Tableau) -> Tableau:
    """Rectify the reversed reading word; transposes standard tableaux."""
    if not is_standard(tab):
        raise ValueError("conjugation is defined for standard tableaux")
    return rectify(tuple(reversed(reading_word(tab))))


@cache
def standard_tableaux(sh: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of the given shape, in a fixed order."""
    if not sh:
        return ((),)
    n = sum(sh)
    out: list[Tableau] = []
    for r in range(len(sh)):
        if r + 1 < len(sh) and sh[r] == sh[r + 1]:
            continue
        smaller = tuple(p for p in (sh[:r] + (sh[r] - 1,) + sh[r + 1 :]) if p)
        for sub in standard_tableaux(smaller):
            rows = [list(row) for row in sub]
            while len(rows) <= r:
                rows.append([])
            rows[r].append(n)
            out.append(tuple(tuple(row) for row in rows))
    return tuple(out)


def all_standard_tableaux(n: int) -> tuple[Tableau, ...]:
    out: list[Tableau] = []
    for sh in partitions_of(n):
        out.extend(standard_tableaux(sh))
    return tuple(out)


def column_strict_tableaux(
    weight: Partition, final_shape: Optional[Partition] = None
) -> tuple[Tableau, ...]:
    """All column-strict tableaux of the given content, optionally of fixed shape.

    Generated as chains of horizontal strips: the cells holding each letter
    form a horizontal strip over the cells of the smaller letters.
    """
    if not is_partition(weight) and weight != ():
        raise ValueError(f"content {weight} must be a partition")
    results: list[Tableau] = []

    def extend(level: int, current: Partition, rows: list[list[int]]) -> None:
        if level == len(weight):
            if final_shape is None or current == final_shape:
                results.append(tuple(tuple(row) for row in rows))
            return
        for bigger in horizontal_strips(current, weight[level]):
            if final_shape is not None and not contains(final_shape, bigger):
                continue
            grown = [list(row) for row in rows]
            for i, length in enumerate(bigger):
                if i >= len(grown):
                    grown.append([])
                grown[i].extend([level + 1] * (length - len(grown[i])))
            extend(level + 1, bigger, grown)

    extend(0, (), [])
    return tuple(results)
