"""Standard-tableau statistics that expand the Macdonald functions.

Every supported H_mu[X;q,t] is a sum of q^b t^a s_shape over standard
tableaux: the t-exponent is a shifted charge, the q-exponent counts
vertical dominoes plus a head offset.  The machinery here builds and
unbuilds the block structure behind those statistics: row/column block
insertion, its inverse, prefix deletion, types, and the sign-reversing
pair involution used in the cancellation argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .partitions import (
    Partition,
    contains,
    first_column_removed,
    first_row_removed,
    is_horizontal_strip,
    is_vertical_strip,
    part,
    remove_snake,
    snake_involution,
)
from .qtpoly import QTPoly
from .schur import SchurExpansion
from .tableaux import (
    Tableau,
    column_insert,
    format_tableau,
    is_standard,
    parse_tableau,
    rectify,
    reading_word,
    reverse_column_insert,
    reverse_row_insert,
    row_insert,
    shape,
    tableau_charge,
    all_standard_tableaux,
)
from .vertex import UnsupportedShapeError, classify_shape

# (alpha, beta, (prefix h, block mm), gamma) per head.  The size-4 block is
# Table 1 verbatim; the two size-3 bent heads carry the alpha values forced
# by the statistic propositions (the printed table swaps them).
HEAD_TABLE: dict[Tableau, tuple[int, int, tuple[int, int], int]] = {
    ((1, 2, 3),): (3, 2, (0, 3), 0),
    ((1, 3), (2,)): (1, 1, (1, 2), 1),
    ((1, 2), (3,)): (2, 1, (1, 2), 2),
    ((1,), (2,), (3,)): (0, 0, (0, 3), 3),
    ((1, 2, 3, 4),): (6, 3, (0, 4), 0),
    ((1, 3, 4), (2,)): (3, 2, (1, 3), 1),
    ((1, 2, 4), (3,)): (4, 2, (2, 2), 2),
    ((1, 2, 3), (4,)): (5, 2, (2, 2), 3),
    ((1, 2), (3, 4)): (4, 2, (2, 2), 2),
    ((1, 3), (2, 4)): (2, 1, (2, 2), 4),
    ((1, 4), (2,), (3,)): (1, 1, (2, 2), 3),
    ((1, 3), (2,), (4,)): (2, 1, (2, 2), 4),
    ((1, 2), (3,), (4,)): (3, 1, (1, 3), 5),
    ((1,), (2,), (3,), (4,)): (0, 0, (0, 4), 6),
}


@dataclass(frozen=True)
class TypeSequence:
    """Full type of a standard tableau: optional head, then H/V/S letters."""

    head: Optional[Tableau]
    blocks: tuple[str, ...]

    def __post_init__(self):
        if self.head is not None and self.head not in HEAD_TABLE:
            raise ValueError(f"{self.head} is not a head tableau")
        bad = [x for x in self.blocks if x not in ("H", "V", "S")]
        if bad:
            raise ValueError(f"unknown block letters {bad}")
        text = "".join(self.blocks)
        if "S" in text and set(text[text.index("S") :]) != {"S"}:
            raise ValueError("singles must follow all dominoes")

    def text(self) -> str:
        letters = ",".join(self.blocks)
        if self.head is None:
            return letters
        return f"({format_tableau(self.head)})|{letters}"


def parse_type_sequence(text: str) -> TypeSequence:
    text = text.strip()
    head: Optional[Tableau] = None
    if text.startswith("("):
        close = text.index(")")
        head = parse_tableau(text[1:close])
        text = text[close + 1 :]
        if not text.startswith("|"):
            raise ValueError("expected '|' after the head tableau")
        text = text[1:]
    blocks = tuple(x.strip() for x in text.split(",") if x.strip())
    return TypeSequence(head, blocks)


def _size(tab: Tableau) -> int:
    return sum(len(row) for row in tab)


def _lower(tab: Tableau, m: int) -> Tableau:
    if any(x <= m for row in tab for x in row):
        raise ValueError(f"cannot lower labels by {m}: some label too small")
    return tuple(tuple(x - m for x in row) for row in tab)


def head_tableau(tab: Tableau, m: int) -> Tableau:
    """The sub-tableau on labels 1..m (always of partition shape)."""
    if _size(tab) < m:
        raise ValueError(f"tableau has fewer than {m} cells")
    sub = []
    for row in tab:
        prefix = tuple(x for x in row if x <= m)
        if not prefix:
            break
        sub.append(prefix)
    head = tuple(sub)
    if _size(head) != m:
        raise RuntimeError(f"labels 1..{m} of {tab} do not form a sub-tableau")
    return head


def delete_prefix(h: int, tab: Tableau) -> Tableau:
    """Remove labels 1..h and lower the rest, staying in the Knuth class."""
    if h < 0:
        raise ValueError("prefix length must be nonnegative")
    if h == 0:
        return tab
    if _size(tab) < h:
        raise ValueError(f"tableau has fewer than {h} cells")
    return rectify(x - h for x in reading_word(tab) if x > h)


def unbuild(m: int, tab: Tableau) -> Tableau:
    """Strip the row block 1..m (or the column block) and close up the rest."""
    if m < 2:
        raise ValueError("block size must be at least 2")
    if _size(tab) < m:
        raise ValueError(f"tableau has fewer than {m} cells")
    if len(tab[0]) >= m and tab[0][:m] == tuple(range(1, m + 1)):
        rest = tab[1:]
        for x in reversed(tab[0][m:]):
            rest = column_insert(rest, x)
        return _lower(rest, m)
    if len(tab) >= m and all(tab[i][0] == i + 1 for i in range(m)):
        extras = tuple(tab[i][0] for i in range(m, len(tab)))
        rest = tuple(row[1:] for row in tab if len(row) > 1)
        for x in reversed(extras):
            rest = row_insert(rest, x)
        return _lower(rest, m)
    raise ValueError(f"labels 1..{m} form neither a first-row nor first-column block")


def _strip_cells(outer: Partition, inner: Partition) -> list[tuple[int, int]]:
    return [
        (r, c)
        for r in range(1, len(outer) + 1)
        for c in range(part(inner, r) + 1, part(outer, r) + 1)
    ]


def add_row_block(m: int, rho: Partition, tab: Tableau) -> Tableau:
    """Build a bigger tableau whose smallest m labels form a first-row block,
    steered by the shape rho."""
    rho = tuple(rho)
    n = _size(tab)
    lam = shape(tab)
    if sum(rho) != 2 * n + m:
        raise ValueError(f"|rho| must be {2 * n + m}, got {sum(rho)}")
    if not (contains(rho, lam) and is_horizontal_strip(rho, lam)):
        raise ValueError(f"{rho}/{lam} is not a horizontal strip")
    anchor = first_row_removed(rho)
    cells = sorted(_strip_cells(lam, anchor), key=lambda rc: -rc[1])
    work, ejected = tab, []
    for cell in cells:
        work, letter = reverse_column_insert(work, cell)
        ejected.append(letter)
    if ejected != sorted(ejected):
        raise RuntimeError(f"evacuation of {tab} against {rho} not increasing")
    out = tuple(tuple(x + m for x in row) for row in work)
    for x in range(1, m + 1):
        out = row_insert(out, x)
    for x in ejected:
        out = row_insert(out, x + m)
    return out


def inverse_row_block(m: int, rho: Partition, built: Tableau) -> Tableau:
    """Recover T from add_row_block(m, rho, T) = built."""
    rho = tuple(rho)
    size = _size(built)
    if sum(rho) != 2 * (size - m) + m:
        raise ValueError(f"|rho| must be {2 * (size - m) + m}, got {sum(rho)}")
    lam = shape(built)
    anchor = first_row_removed(rho)
    if not contains(lam, anchor):
        raise ValueError(f"{lam} does not contain {anchor}")
    cells = sorted(_strip_cells(lam, anchor), key=lambda rc: -rc[1])
    work, popped = built, []
    for cell in cells:
        work, letter = reverse_row_insert(work, cell)
        popped.append(letter)
    letters = popped[::-1]
    if letters[:m] != list(range(1, m + 1)):
        raise ValueError(f"{built} was not built over {rho}: block 1..{m} missing")
    rest = _lower(work, m)
    for x in reversed([x - m for x in letters[m:]]):
        rest = column_insert(rest, x)
    return rest


def add_col_block(m: int, rho: Partition, tab: Tableau) -> Tableau:
    """Transpose companion of add_row_block: the smallest m labels end up as a
    first-column block."""
    rho = tuple(rho)
    n = _size(tab)
    lam = shape(tab)
    if sum(rho) != 2 * n + m:
        raise ValueError(f"|rho| must be {2 * n + m}, got {sum(rho)}")
    if not (contains(rho, lam) and is_vertical_strip(rho, lam)):
        raise ValueError(f"{rho}/{lam} is not a vertical strip")
    anchor = first_column_removed(rho)
    cells = sorted(_strip_cells(lam, anchor), key=lambda rc: -rc[0])
    work, ejected = tab, []
    for cell in cells:
        work, letter = reverse_row_insert(work, cell)
        ejected.append(letter)
    if ejected != sorted(ejected):
        raise RuntimeError(f"evacuation of {tab} against {rho} not increasing")
    out = tuple(tuple(x + m for x in row) for row in work)
    for x in range(1, m + 1):
        out = column_insert(out, x)
    for x in ejected:
        out = column_insert(out, x + m)
    return out


def inverse_col_block(m: int, rho: Partition, built: Tableau) -> Tableau:
    """Recover T from add_col_block(m, rho, T) = built."""
    rho = tuple(rho)
    size = _size(built)
    if sum(rho) != 2 * (size - m) + m:
        raise ValueError(f"|rho| must be {2 * (size - m) + m}, got {sum(rho)}")
    lam = shape(built)
    anchor = first_column_removed(rho)
    if not contains(lam, anchor):
        raise ValueError(f"{lam} does not contain {anchor}")
    cells = sorted(_strip_cells(lam, anchor), key=lambda rc: -rc[0])
    work, popped = built, []
    for cell in cells:
        work, letter = reverse_column_insert(work, cell)
        popped.append(letter)
    letters = popped[::-1]
    if letters[:m] != list(range(1, m + 1)):
        raise ValueError(f"{built} was not built over {rho}: block 1..{m} missing")
    rest = _lower(work, m)
    for x in reversed([x - m for x in letters[m:]]):
        rest = row_insert(rest, x)
    return rest


def _two_col_blocks(tab: Tableau, dominoes: int) -> tuple[str, ...]:
    letters = []
    for _ in range(dominoes):
        if len(tab[0]) >= 2 and tab[0][1] == 2:
            letters.append("H")
        elif len(tab) >= 2 and tab[1][0] == 2:
            letters.append("V")
        else:
            raise ValueError(f"label 2 is not adjacent to label 1 in {tab}")
        tab = unbuild(2, tab)
    letters.extend("S" * _size(tab))
    return tuple(letters)


def type_two_col(tab: Tableau, dominoes: int) -> TypeSequence:
    """The (2^a 1^b) type: one H/V letter per unbuilt domino, then singles."""
    if not is_standard(tab):
        raise ValueError("type is defined for standard tableaux")
    if not 0 <= 2 * dominoes <= _size(tab):
        raise ValueError(f"cannot take {dominoes} dominoes out of {_size(tab)} cells")
    return TypeSequence(None, _two_col_blocks(tab, dominoes))


def _direct_parts(mu: Partition) -> tuple[int, int, int]:
    kind = classify_shape(mu)
    if kind[0] != "direct":
        raise UnsupportedShapeError(
            f"statistics are defined for the row families only, not {mu}"
        )
    return kind[1], kind[2], kind[3]


def full_type(mu: Partition, tab: Tableau) -> TypeSequence:
    """type_mu(T): for m in {3,4} the head plus the type of the reduced tableau."""
    mu = tuple(mu)
    if _size(tab) != sum(mu):
        raise ValueError(f"|T| = {_size(tab)} but |mu| = {sum(mu)}")
    m, a, b = _direct_parts(mu)
    if m == 2:
        return type_two_col(tab, a)
    head = head_tableau(tab, m)
    h, mm = HEAD_TABLE[head][2]
    reduced = unbuild(mm, delete_prefix(h, tab))
    return TypeSequence(head, _two_col_blocks(reduced, a))


def stat_pair(mu: Partition, tab: Tableau) -> tuple[int, int]:
    """(a_mu(T), b_mu(T)); q tracks b and t tracks a in the expansions."""
    mu = tuple(mu)
    if _size(tab) != sum(mu):
        raise ValueError(f"|T| = {_size(tab)} but |mu| = {sum(mu)}")
    m, a, b = _direct_parts(mu)
    c = tableau_charge(tab)
    if m == 2:
        blocks = _two_col_blocks(tab, a)
        alpha, gamma = 0, 0
        beta_shift = 0
    else:
        head = head_tableau(tab, m)
        alpha, beta, (h, mm), gamma = HEAD_TABLE[head]
        tab = unbuild(mm, delete_prefix(h, tab))
        blocks = _two_col_blocks(tab, a)
        beta_shift = beta * (2 * a + b)
    n = 2 * a + b
    h_weight = sum(
        (n + 1) - 2 * i for i, letter in enumerate(blocks[:a], start=1) if letter == "H"
    )
    return (c - alpha - beta_shift - h_weight, blocks.count("V") + gamma)


def stat_genfun(mu: Partition) -> SchurExpansion:
    """Sum of q^b_mu(T) t^a_mu(T) s_shape(T) over all standard T of size |mu|."""
    mu = tuple(mu)
    _direct_parts(mu)
    total: dict[Partition, QTPoly] = {}
    for tab in all_standard_tableaux(sum(mu)):
        a, b = stat_pair(mu, tab)
        sh = shape(tab)
        total[sh] = total.get(sh, QTPoly.zero()) + QTPoly.monomial(b, a)
    return SchurExpansion(total)


def head_genfun(mu: Partition, heads: tuple[Tableau, ...]) -> SchurExpansion:
    """Sum of q^(b_mu(T) - gamma) t^a_mu(T) s_shape(T) over standard T whose
    head lies in heads (all sharing one gamma)."""
    mu = tuple(mu)
    m, _, _ = _direct_parts(mu)
    gammas = {HEAD_TABLE[S][3] for S in heads}
    if len(gammas) != 1:
        raise ValueError("heads must share a single gamma offset")
    gamma = gammas.pop()
    total: dict[Partition, QTPoly] = {}
    for tab in all_standard_tableaux(sum(mu)):
        if head_tableau(tab, m) not in heads:
            continue
        a, b = stat_pair(mu, tab)
        sh = shape(tab)
        total[sh] = total.get(sh, QTPoly.zero()) + QTPoly.monomial(b - gamma, a)
    return SchurExpansion(total)


def classify_pair(n: int, m: int, tab: Tableau, rho: Partition) -> str:
    """stable / unstable / immaterial status of a build pair (T, rho)."""
    if _size(tab) != n:
        raise ValueError(f"|T| = {_size(tab)} but n = {n}")
    core = remove_snake(tuple(rho), n)
    if core is None:
        return "immaterial"
    built = add_row_block(m, rho, tab)
    return "stable" if shape(built) == core else "unstable"


def pair_involution(n: int, m: int, tab: Tableau, rho: Partition) -> tuple[Tableau, Partition]:
    """The sign-reversing involution on unstable pairs: flip the snake over the
    built shape and rebuild the tableau against the flipped steering shape."""
    status = classify_pair(n, m, tab, rho)
    if status != "unstable":
        raise ValueError(f"pair is {status}; the involution needs an unstable pair")
    built = add_row_block(m, tuple(rho), tab)
    flipped = snake_involution(shape(built), n, tuple(rho))
    return inverse_row_block(m, flipped, built), flipped


def is_unimodal(seq) -> bool:
    """Weakly increases to a peak, then weakly decreases."""
    values = list(seq)
    if not values:
        return True
    i = 0
    while i + 1 < len(values) and values[i] <= values[i + 1]:
        i += 1
    while i + 1 < len(values) and values[i] >= values[i + 1]:
        i += 1
    return i == len(values) - 1


def unimodal_profile(mu: Partition) -> dict[TypeSequence, tuple[int, ...]]:
    """Counts of standard tableaux by full type and a_mu value: for each type
    the sequence (A^0, A^1, ..., A^max)."""
    mu = tuple(mu)
    _direct_parts(mu)
    by_type: dict[TypeSequence, dict[int, int]] = {}
    for tab in all_standard_tableaux(sum(mu)):
        ts = full_type(mu, tab)
        a, _ = stat_pair(mu, tab)
        bucket = by_type.setdefault(ts, {})
        bucket[a] = bucket.get(a, 0) + 1
    return {
        ts: tuple(counts.get(i, 0) for i in range(max(counts) + 1))
        for ts, counts in by_type.items()
    }
