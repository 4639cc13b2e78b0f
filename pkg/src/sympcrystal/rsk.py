"""Column insertion, two-line arrays, and the matrix correspondence.

A matrix here is a tuple of equal-length tuples of nonnegative ints.  The
two-line array of a matrix lists each cell ``(i, j)`` with multiplicity
``M[i][j]``, ordered so the top line weakly increases and, within a block of
equal top entries, the bottom line weakly decreases.

Column insertion of ``x`` bumps the smallest entry that is at least ``x``
(weakly) out of the current column and carries it one column to the right;
``P(M)`` column-inserts the bottom line and ``Q(M) = P(M transposed)``.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Iterable, Iterator, Sequence

from .tableaux import Tableau

Matrix = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# matrices


def matrix(rows) -> Matrix:
    """Validate and freeze a rectangular matrix of nonnegative ints."""
    out = tuple(tuple(int(x) for x in r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    if any(x < 0 for r in out for x in r):
        raise ValueError("negative entry")
    return out


def zero_matrix(nrows: int, ncols: int) -> Matrix:
    return tuple((0,) * ncols for _ in range(nrows))


def transpose_matrix(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def rotate180(m: Matrix) -> Matrix:
    return tuple(tuple(reversed(r)) for r in reversed(m))


def row_sums(m: Matrix) -> tuple[int, ...]:
    return tuple(sum(r) for r in m)


def is_symmetric(m: Matrix) -> bool:
    return m == transpose_matrix(m)


def is_admissible(m: Matrix) -> bool:
    """Square, symmetric, with every diagonal entry even."""
    return (
        all(len(r) == len(m) for r in m)
        and is_symmetric(m)
        and all(m[i][i] % 2 == 0 for i in range(len(m)))
    )


def format_matrix(m: Matrix) -> str:
    return "\n".join(",".join(str(x) for x in r) for r in m)


def parse_matrix(text: str) -> Matrix:
    """Rows of comma-separated ints, separated by newlines or semicolons."""
    rows = []
    for line in text.replace(";", "\n").splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append(tuple(int(tok) for tok in line.split(",")))
        except ValueError:
            raise ValueError(f"malformed matrix row {line!r}") from None
    return matrix(rows)


def matrices_with_sum(nrows: int, ncols: int, max_total: int) -> Iterator[Matrix]:
    """All ``nrows x ncols`` nonnegative matrices with entry sum <= max_total."""
    cells = nrows * ncols
    flat = [0] * cells

    def rec(k: int, left: int) -> Iterator[Matrix]:
        if k == cells:
            yield tuple(
                tuple(flat[i * ncols : (i + 1) * ncols]) for i in range(nrows)
            )
            return
        for v in range(left + 1):
            flat[k] = v
            yield from rec(k + 1, left - v)
        flat[k] = 0

    yield from rec(0, max_total)


def symmetric_even_diagonal(n: int, max_row_sum: int) -> Iterator[Matrix]:
    """Symmetric ``n x n`` matrices, even diagonal, all row sums <= max_row_sum."""
    grid = [[0] * n for _ in range(n)]
    # fill the upper triangle row by row, mirroring as we go
    cells = [(i, j) for i in range(n) for j in range(i, n)]

    def rec(k: int) -> Iterator[Matrix]:
        if k == len(cells):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[k]
        budget = max_row_sum - sum(grid[i][:j])
        if i != j:
            budget = min(budget, max_row_sum - sum(grid[j][:j]))
        step = 2 if i == j else 1
        for v in range(0, budget + 1, step):
            grid[i][j] = v
            grid[j][i] = v
            yield from rec(k + 1)
        grid[i][j] = 0
        grid[j][i] = 0

    yield from rec(0)


# ---------------------------------------------------------------------------
# two-line arrays


def two_line_array(m: Matrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Top line weakly increasing, bottom weakly decreasing within each block."""
    top: list[int] = []
    bottom: list[int] = []
    for i, row in enumerate(m, start=1):
        for j in range(len(row), 0, -1):
            mult = row[j - 1]
            top.extend([i] * mult)
            bottom.extend([j] * mult)
    return tuple(top), tuple(bottom)


def matrix_from_pairs(
    pairs: Iterable[tuple[int, int]], nrows: int | None = None, ncols: int | None = None
) -> Matrix:
    """Matrix whose cell ``(i, j)`` counts the pairs, 1-based."""
    pairs = list(pairs)
    if nrows is None:
        nrows = max((i for i, _ in pairs), default=0)
    if ncols is None:
        ncols = max((j for _, j in pairs), default=0)
    grid = [[0] * ncols for _ in range(nrows)]
    for i, j in pairs:
        if not (1 <= i <= nrows and 1 <= j <= ncols):
            raise ValueError(f"pair {(i, j)} outside a {nrows}x{ncols} matrix")
        grid[i - 1][j - 1] += 1
    return tuple(tuple(r) for r in grid)


# ---------------------------------------------------------------------------
# column insertion


def _cols_of(t: Tableau) -> list[list[int]]:
    rows = t.rows
    if not rows:
        return []
    return [
        [rows[i][c] for i in range(len(rows)) if len(rows[i]) > c]
        for c in range(len(rows[0]))
    ]


def _tableau_from_cols(cols: list[list[int]]) -> Tableau:
    if not cols:
        return Tableau(())
    nrows = len(cols[0])
    return Tableau(
        tuple(
            tuple(col[i] for col in cols if len(col) > i) for i in range(nrows)
        )
    )


def _column_bump(cols: list[list[int]], x: int) -> tuple[int, int]:
    """Insert ``x``; return the (row, col) of the new box, 0-based."""
    c = 0
    while True:
        if c == len(cols):
            cols.append([x])
            return 0, c
        col = cols[c]
        pos = bisect_left(col, x)
        if pos == len(col):
            col.append(x)
            return len(col) - 1, c
        x, col[pos] = col[pos], x
        c += 1


def column_insert(t: Tableau, x: int) -> Tableau:
    """Column-insert one letter into a tableau."""
    cols = _cols_of(t)
    _column_bump(cols, x)
    return _tableau_from_cols(cols)


def column_insert_word(word: Sequence[int]) -> Tableau:
    """Column-insert a word letter by letter, starting from the empty tableau."""
    cols: list[list[int]] = []
    for x in word:
        _column_bump(cols, x)
    return _tableau_from_cols(cols)


def rsk_column(m: Matrix) -> tuple[Tableau, Tableau]:
    """The pair ``(P, Q)``: insert the bottom line; Q comes from the transpose."""
    p = column_insert_word(two_line_array(m)[1])
    q = column_insert_word(two_line_array(transpose_matrix(m))[1])
    return p, q


def rsk_column_recorded(m: Matrix) -> tuple[Tableau, Tableau]:
    """Same pair, with Q built by recording where each new box lands."""
    cols: list[list[int]] = []
    q_rows: list[list[int]] = []
    top, bottom = two_line_array(m)
    for i, j in zip(top, bottom):
        r, _ = _column_bump(cols, j)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(i)
    return _tableau_from_cols(cols), Tableau(tuple(tuple(r) for r in q_rows))


def _reverse_column_extract(cols: list[list[int]], row: int, col: int) -> int:
    """Undo an insertion whose new box was at (row, col); return the letter."""
    if col >= len(cols) or len(cols[col]) != row + 1:
        raise ValueError("cell is not a removable corner")
    x = cols[col].pop()
    if not cols[col]:
        cols.pop()
    for c in range(col - 1, -1, -1):
        colc = cols[c]
        pos = bisect_right(colc, x) - 1
        if pos < 0:
            raise ValueError("reverse insertion fell off a column")
        x, colc[pos] = colc[pos], x
    return x


def rsk_column_inverse(
    p: Tableau, q: Tableau, nrows: int | None = None, ncols: int | None = None
) -> Matrix:
    """Matrix mapping to ``(p, q)``; raises ValueError if the pair is invalid.

    The last box created always holds the rightmost copy of the largest entry
    of the recording tableau, so extraction peels those off in reverse.
    """
    if p.shape != q.shape:
        raise ValueError("tableaux have different shapes")
    cols = _cols_of(p)
    q_rows = [list(r) for r in q.rows]
    pairs: list[tuple[int, int]] = []
    for _ in range(p.size):
        best_val = best_r = best_c = -1
        for r, row in enumerate(q_rows):
            if not row:
                continue
            c = len(row) - 1
            v = row[c]  # row max sits at the end
            if v > best_val or (v == best_val and c > best_c):
                best_val, best_r, best_c = v, r, c
        if best_r + 1 < len(q_rows) and len(q_rows[best_r + 1]) > best_c:
            raise ValueError("recording tableau has no removable corner")
        q_rows[best_r].pop()
        letter = _reverse_column_extract(cols, best_r, best_c)
        pairs.append((best_val, letter))
    return matrix_from_pairs(pairs, nrows, ncols)


# ---------------------------------------------------------------------------
# row insertion (used by the rotation identity and the trace recursions)


def _row_bump(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Row-insert ``x`` (bump the leftmost strictly larger entry); 0-based box."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        pos = bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            return r, len(row) - 1
        x, row[pos] = row[pos], x
        r += 1


def row_insert(t: Tableau, x: int) -> Tableau:
    rows = [list(r) for r in t.rows]
    _row_bump(rows, x)
    return Tableau(tuple(tuple(r) for r in rows))


def row_insert_word(word: Sequence[int]) -> Tableau:
    rows: list[list[int]] = []
    for x in word:
        _row_bump(rows, x)
    return Tableau(tuple(tuple(r) for r in rows))


def rsk_row(pairs: Iterable[tuple[int, int]]) -> tuple[Tableau, Tableau]:
    """Row-insert the second members, recording the first at each new box."""
    rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for label, x in pairs:
        r, _ = _row_bump(rows, x)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(label)
    return (
        Tableau(tuple(tuple(r) for r in rows)),
        Tableau(tuple(tuple(r) for r in q_rows)),
    )


def reverse_row_insert(t: Tableau, row: int) -> tuple[Tableau, int]:
    """Undo a row insertion that ended in ``row`` (1-based); return (tableau, letter).

    The cell removed is the last box of that row, which must be a corner.
    """
    rows = [list(r) for r in t.rows]
    r = row - 1
    if r < 0 or r >= len(rows):
        raise ValueError(f"no row {row}")
    if r + 1 < len(rows) and len(rows[r + 1]) >= len(rows[r]):
        raise ValueError(f"row {row} does not end at a corner")
    x = rows[r].pop()
    if not rows[r]:
        rows.pop()
    for rr in range(r - 1, -1, -1):
        rowr = rows[rr]
        pos = bisect_left(rowr, x) - 1
        if pos < 0:
            raise ValueError("reverse insertion fell off a row")
        x, rowr[pos] = rowr[pos], x
    return Tableau(tuple(tuple(r) for r in rows)), x


def complemented_row_pairs(m: Matrix) -> list[tuple[int, int]]:
    """Recorded pairs reading rows bottom-up, labels complemented to n+1-r.

    Row-inserting these records the same tableau as the recording tableau of
    the half-turn rotation of ``m``.
    """
    n = len(m)
    pairs: list[tuple[int, int]] = []
    for r in range(n, 0, -1):
        for j, mult in enumerate(m[r - 1], start=1):
            pairs.extend([(n + 1 - r, j)] * mult)
    return pairs


def remove_rightmost(t: Tableau, value: int) -> Tableau:
    """Remove the rightmost cell holding ``value``; it must sit at a corner."""
    rows = [list(r) for r in t.rows]
    best: tuple[int, int] | None = None
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if v == value and (best is None or c > best[1]):
                best = (r, c)
    if best is None:
        raise ValueError(f"{value} does not appear")
    r, c = best
    if c != len(rows[r]) - 1 or (r + 1 < len(rows) and len(rows[r + 1]) > c):
        raise ValueError(f"rightmost {value} is not at a corner")
    rows[r].pop()
    if not rows[r]:
        rows.pop()
    return Tableau(tuple(tuple(r) for r in rows))


def remove_biggest(t: Tableau, count: int) -> Tableau:
    """Remove the ``count`` largest entries, rightmost copies first."""
    for _ in range(count):
        t = remove_rightmost(t, max(t.entries()))
    return t


# ---------------------------------------------------------------------------
# the column statistic


def c_index(m: Matrix) -> int:
    """Number of columns of ``P(m)``."""
    p = rsk_column(m)[0]
    return p.shape[0] if p.rows else 0


def longest_weakly_decreasing(seq: Sequence[int]) -> int:
    """Length of the longest weakly decreasing subsequence."""
    # patience sorting on the negated, weakly increasing version
    piles: list[int] = []
    for x in seq:
        pos = bisect_right(piles, -x)
        if pos == len(piles):
            piles.append(-x)
        else:
            piles[pos] = -x
    return len(piles)


def enumerate_admissible(m: int, g: int) -> list[Matrix]:
    """Symmetric even-diagonal ``m x m`` matrices with ``c_index`` at most 2g.

    Any weakly decreasing block of the bottom line is at most c long, so row
    sums are bounded by 2g and the search space is finite.
    """
    return [
        mat for mat in symmetric_even_diagonal(m, 2 * g) if c_index(mat) <= 2 * g
    ]
