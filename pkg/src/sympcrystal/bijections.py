"""The two structure-preserving bijections and their trace oracles.

* :func:`psi` sends a King tableau of shape ``mu`` (inside the ``m x g``
  rectangle) to the oscillating tableau whose shapes are rectangle
  complements of the letter-by-letter subshapes of the tableau.
* :func:`phi` sends an oscillating tableau that starts and ends empty to a
  symmetric nonnegative matrix with even diagonal, by standardizing the
  tableau to a fixed-point-free involution and semistandardizing back.

Both come with inverses and raise ValueError off their domains.
"""

from __future__ import annotations

from .oscillating import SSOT, OscStrip
from .rsk import (
    Matrix,
    is_admissible,
    matrix,
    remove_rightmost,
    reverse_row_insert,
    row_insert,
    row_sums,
    two_line_array,
)
from .tableaux import (
    KingTableau,
    Partition,
    Tableau,
    normalize_partition,
    rank_letter,
    rect_complement,
)


# ---------------------------------------------------------------------------
# King tableaux <-> oscillating tableaux


def psi(t: KingTableau, m: int, g: int) -> SSOT:
    """Ladder of rectangle complements of the subshapes of ``t``.

    Strip ``i`` runs from the complement of the letters-below-``i`` shape
    (in the ``(i-1) x g`` rectangle) up to the complement of the
    letters-up-to-``i`` shape and back down to the complement of the
    letters-up-to-barred-``i`` shape (both in the ``i x g`` rectangle).
    """
    if t.max_letter > m:
        raise ValueError(f"letters exceed {m}")
    if t.shape and (len(t.shape) > m or t.shape[0] > g):
        raise ValueError(f"shape {t.shape} not inside a {m}x{g} rectangle")
    strips = []
    for i in range(1, m + 1):
        inside = rect_complement(t.subshape(2 * (i - 1)), i - 1, g)
        star = rect_complement(t.subshape(2 * i - 1), i, g)
        outside = rect_complement(t.subshape(2 * i), i, g)
        strips.append(OscStrip.from_partitions(inside, star, outside))
    return SSOT(tuple(strips))


def psi_inverse(s: SSOT, g: int) -> KingTableau:
    """King tableau whose subshape ladder complements the shapes of ``s``."""
    m = s.length
    if s.inside != ():
        raise ValueError("tableau must start at the empty shape")
    if s.num_cols > g:
        raise ValueError(f"a peak shape needs more than {g} columns")
    subshapes: list[Partition] = [()]
    for i in range(1, m + 1):
        strip = s.strips[i - 1]
        subshapes.append(rect_complement(strip.star, i, g))
        subshapes.append(rect_complement(strip.outside, i, g))
    grid: list[list[int]] = []
    for r in range(1, 2 * m + 1):
        prev, cur = subshapes[r - 1], subshapes[r]
        prev = prev + (0,) * (len(cur) - len(prev))
        if len(prev) > len(cur):
            raise ValueError("subshape ladder is not increasing")
        for row in range(len(cur)):
            if cur[row] < prev[row]:
                raise ValueError("subshape ladder is not increasing")
            if cur[row] > prev[row]:
                while len(grid) <= row:
                    grid.append([])
                grid[row].extend([rank_letter(r)] * (cur[row] - prev[row]))
    return KingTableau(tuple(tuple(r) for r in grid))


# ---------------------------------------------------------------------------
# standardization


def standardized_word(m: Matrix) -> tuple[int, ...]:
    """Bottom line of the two-line array with value ``v`` occurrences replaced
    by the block ``beta_{v-1}+1..beta_v``, handed out in decreasing order."""
    alpha = row_sums(m)
    beta = [0]
    for a in alpha:
        beta.append(beta[-1] + a)
    seen = [0] * (len(alpha) + 1)
    out = []
    for v in two_line_array(m)[1]:
        seen[v] += 1
        out.append(beta[v] - seen[v] + 1)
    return tuple(out)


def block_of(q: int, alpha: tuple[int, ...]) -> int:
    """The block index ``i`` with ``beta_{i-1} < q <= beta_i`` (1-based)."""
    total = 0
    for i, a in enumerate(alpha, start=1):
        total += a
        if q <= total:
            return i
    raise ValueError(f"{q} exceeds the total weight {total}")


# ---------------------------------------------------------------------------
# oscillating tableaux <-> symmetric matrices


def phi(t: SSOT) -> Matrix:
    """Matrix of the involution matched by unwinding the tableau's removals."""
    if t.inside != () or t.outside != ():
        raise ValueError("tableau must start and end at the empty shape")
    chain = t.chain()
    total = len(chain) - 1
    v = Tableau(())
    mate: dict[int, int] = {}
    for k in range(1, total + 1):
        prev, cur = chain[k - 1], chain[k]
        if sum(cur) > sum(prev):
            row = next(
                r
                for r in range(len(cur))
                if cur[r] > (prev[r] if r < len(prev) else 0)
            )
            rows = [list(x) for x in v.rows]
            if row == len(rows):
                rows.append([])
            rows[row].append(k)
            v = Tableau(tuple(tuple(x) for x in rows))
        else:
            row = next(r for r in range(len(prev)) if prev[r] > (cur + (0,) * len(prev))[r])
            v, j = reverse_row_insert(v, row + 1)
            mate[j] = k
            mate[k] = j
    alpha = t.weight()
    grid = [[0] * t.length for _ in range(t.length)]
    for q in range(1, total + 1):
        grid[block_of(q, alpha) - 1][block_of(mate[q], alpha) - 1] += 1
    return matrix(grid)


def phi_inverse(m: Matrix) -> SSOT:
    """Oscillating tableau whose standardized chain unwinds to ``m``."""
    if not is_admissible(m):
        raise ValueError("matrix must be symmetric with even diagonal")
    alpha = row_sums(m)
    total = sum(alpha)
    word = standardized_word(m)
    w = {q: word[q - 1] for q in range(1, total + 1)}
    if any(w[w[q]] != q or w[q] == q for q in w):
        raise ValueError("standardization is not a fixed-point-free involution")
    # walk the recording tableau down from the empty end
    shapes: list[Partition] = [()] * (total + 1)
    v = Tableau(())
    for q in range(total - 1, -1, -1):
        k = q + 1
        if k > w[k]:
            v = row_insert(v, w[k])
        else:
            if max(v.entries(), default=0) != k:
                raise ValueError("deletion is not the largest entry")
            v = remove_rightmost(v, k)
        shapes[q] = v.shape
    if shapes[0] != ():
        raise ValueError("chain does not return to the empty shape")
    strips = []
    beta = 0
    for a in alpha:
        seg = shapes[beta : beta + a + 1]
        word_i = []
        for prev, cur in zip(seg, seg[1:]):
            padded_prev = prev + (0,) * (len(cur) - len(prev))
            padded_cur = cur + (0,) * (len(prev) - len(cur))
            row = next(
                r
                for r in range(max(len(prev), len(cur)))
                if padded_prev[r] != padded_cur[r]
            )
            word_i.append(row + 1 if sum(cur) > sum(prev) else -(row + 1))
        strips.append(OscStrip(seg[0], tuple(word_i)))
        beta += a
    return SSOT(tuple(strips))


# ---------------------------------------------------------------------------
# trace tables


def trace_tables(m: Matrix) -> tuple[list[Tableau], list[Tableau]]:
    """The insertion and recording traces ``(P_q, V_q)`` for ``q = 0..m'``.

    ``P_q`` row-inserts the reversed bottom line one letter at a time from the
    right end of the two-line array.  ``V_q`` follows the same walk but
    inserts only matched partners, deleting entries as their mates close:
    moving from ``V_(q+1)`` to ``V_q`` looks at column ``q+1 = (i, j)`` and
    inserts ``j`` when ``i > j``, deletes the rightmost ``i`` when ``i < j``,
    and on the diagonal splits its run of equal columns half and half.
    """
    top, bottom = two_line_array(m)
    total = len(bottom)
    p_tables = [Tableau(())] * (total + 1)
    for q in range(total - 1, -1, -1):
        p_tables[q] = row_insert(p_tables[q + 1], bottom[q])
    v_tables = [Tableau(())] * (total + 1)
    for q in range(total - 1, -1, -1):
        i, j = top[q], bottom[q]
        prev = v_tables[q + 1]
        if i > j:
            v_tables[q] = row_insert(prev, j)
        elif i < j:
            if max(prev.entries(), default=0) != i:
                raise ValueError("deletion is not the largest entry")
            v_tables[q] = remove_rightmost(prev, i)
        else:
            a = b = q
            while a > 0 and (top[a - 1], bottom[a - 1]) == (i, i):
                a -= 1
            while b + 1 < total and (top[b + 1], bottom[b + 1]) == (i, i):
                b += 1
            run = b - a + 1
            if run % 2:
                raise ValueError("odd run of diagonal columns")
            pos_from_right = b - q + 1
            if pos_from_right <= run // 2:
                v_tables[q] = row_insert(prev, i)
            else:
                v_tables[q] = remove_rightmost(prev, i)
    return p_tables, v_tables


def inverse_column_word(m: Matrix) -> tuple[int, ...]:
    """The bottom line read right to left."""
    return tuple(reversed(two_line_array(m)[1]))
