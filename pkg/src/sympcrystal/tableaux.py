"""Partitions, weights, and tableaux over the barred alphabet.

Conventions used across the package:

* A partition is a tuple of weakly decreasing positive ints, e.g. ``(3, 1)``;
  the empty partition is ``()``.  Trailing zeros are accepted on input by
  :func:`normalize_partition` but never stored.
* A weight for rank ``m`` is a tuple of ``m`` ints.  Coordinate ``i``
  (0-based) is the coefficient of the basis vector attached to the barred
  letter ``i+1``.  A weight is dominant when its coordinates are weakly
  increasing and nonnegative; the corresponding partition is the reversed
  coordinate tuple.
* The barred alphabet is ordered ``1 < 1' < 2 < 2' < ... < m < m'`` where the
  primed letter is the barred one.  A letter is stored as a signed int:
  ``+i`` for the plain letter and ``-i`` for the barred letter.  Text form
  uses a ``b`` suffix (``2b`` is barred 2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

Partition = tuple[int, ...]
Weight = tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions


def normalize_partition(parts) -> Partition:
    """Validate weak decrease and strip trailing zeros; raise ValueError otherwise."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    return parts


def conjugate(mu: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > i) for i in range(mu[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    """True when the diagram of ``inner`` sits inside ``outer``."""
    return len(inner) <= len(outer) and all(
        inner[i] <= outer[i] for i in range(len(inner))
    )


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """True when ``outer/inner`` has at most one box in every column."""
    if not contains(outer, inner):
        return False
    inner = inner + (0,) * (len(outer) - len(inner))
    return all(outer[i + 1] <= inner[i] for i in range(len(outer) - 1))


def is_vertical_strip(outer: Partition, inner: Partition) -> bool:
    """True when ``outer/inner`` has at most one box in every row."""
    if not contains(outer, inner):
        return False
    inner = inner + (0,) * (len(outer) - len(inner))
    return all(outer[i] - inner[i] <= 1 for i in range(len(outer)))


def rect_complement(mu: Partition, rows: int, cols: int) -> Partition:
    """Complement of ``mu`` inside the ``rows x cols`` rectangle.

    The result is read off upside down: part ``i`` is ``cols`` minus part
    ``rows+1-i`` of ``mu``.  Raises ValueError when ``mu`` does not fit.
    """
    if len(mu) > rows or (mu and mu[0] > cols):
        raise ValueError(f"{mu} does not fit in a {rows}x{cols} rectangle")
    padded = mu + (0,) * (rows - len(mu))
    return normalize_partition(cols - padded[rows - 1 - i] for i in range(rows))


def add_box(mu: Partition, row: int) -> Partition:
    """Partition with one box added in ``row`` (1-based); ValueError if invalid."""
    if row < 1 or row > len(mu) + 1:
        raise ValueError(f"cannot add a box to row {row} of {mu}")
    padded = list(mu) + [0] * (row - len(mu))
    padded[row - 1] += 1
    if row > 1 and padded[row - 1] > padded[row - 2]:
        raise ValueError(f"cannot add a box to row {row} of {mu}")
    return normalize_partition(padded)


def remove_box(mu: Partition, row: int) -> Partition:
    """Partition with one box removed from ``row`` (1-based); ValueError if invalid."""
    if row < 1 or row > len(mu):
        raise ValueError(f"cannot remove a box from row {row} of {mu}")
    parts = list(mu)
    parts[row - 1] -= 1
    if row < len(mu) and parts[row - 1] < parts[row]:
        raise ValueError(f"cannot remove a box from row {row} of {mu}")
    return normalize_partition(parts)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions fitting in a ``rows x cols`` rectangle, lexicographically."""

    def rec(prev: int, left: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if left == 0:
            return
        for first in range(1, prev + 1):
            for rest in rec(first, left - 1):
                yield (first, *rest)

    yield from rec(cols, rows)


def partitions_of(n: int, max_length: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n``, optionally with at most ``max_length`` parts."""

    def rec(left: int, prev: int, slots: int) -> Iterator[tuple[int, ...]]:
        if left == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(left, prev), 0, -1):
            for rest in rec(left - first, first, slots - 1):
                yield (first, *rest)

    yield from rec(n, n, n if max_length is None else max_length)


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order: every prefix sum of ``lam`` is at least that of ``mu``."""
    total = 0
    for i in range(max(len(lam), len(mu))):
        total += (lam[i] if i < len(lam) else 0) - (mu[i] if i < len(mu) else 0)
        if total < 0:
            return False
    return True


def parse_partition(text: str) -> Partition:
    """Parse ``[3,1]`` (or ``[]``) into a partition."""
    return normalize_partition(parse_int_list(text))


def format_partition(mu: Partition) -> str:
    return "[" + ",".join(str(p) for p in mu) + "]"


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parse a bracketed comma-separated int list like ``[2,0,-1]``."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"expected a bracketed list, got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        return tuple(int(tok) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"malformed int list {text!r}") from None


# ---------------------------------------------------------------------------
# weights


def weight_to_partition(w: Weight) -> Partition:
    """Partition attached to a dominant weight (reversed coordinates)."""
    mu = tuple(reversed(w))
    for a, b in zip(mu, mu[1:]):
        if a < b:
            raise ValueError(f"weight {w} is not dominant")
    if mu and mu[-1] < 0:
        raise ValueError(f"weight {w} is not dominant")
    return normalize_partition(mu)


def partition_to_weight(mu: Partition, m: int) -> Weight:
    """Dominant weight of rank ``m`` attached to a partition with <= m parts."""
    if len(mu) > m:
        raise ValueError(f"{mu} has more than {m} parts")
    padded = mu + (0,) * (m - len(mu))
    return tuple(reversed(padded))


def is_dominant(w: Weight) -> bool:
    return all(a <= b for a, b in zip(w, w[1:])) and (not w or w[0] >= 0)


def simple_root(i: int, m: int) -> Weight:
    """Simple root ``alpha_i`` for index ``0 <= i < m`` in weight coordinates."""
    if not 0 <= i < m:
        raise ValueError(f"index {i} out of range for rank {m}")
    alpha = [0] * m
    if i == 0:
        alpha[0] = 2
    else:
        alpha[i - 1] = -1
        alpha[i] = 1
    return tuple(alpha)


def coroot_pairing(w: Weight, i: int) -> int:
    """Pairing of a weight with the simple coroot ``alpha_i^v``."""
    if not 0 <= i < len(w):
        raise ValueError(f"index {i} out of range for rank {len(w)}")
    return w[0] if i == 0 else w[i] - w[i - 1]


def add_weights(v: Weight, w: Weight) -> Weight:
    return tuple(a + b for a, b in zip(v, w, strict=True))


# ---------------------------------------------------------------------------
# barred alphabet


def letter_rank(x: int) -> int:
    """Position of a signed letter in the order 1 < 1' < 2 < 2' < ...  (1-based)."""
    if x == 0:
        raise ValueError("0 is not a letter")
    return 2 * x - 1 if x > 0 else -2 * x


def rank_letter(r: int) -> int:
    """Inverse of :func:`letter_rank`."""
    if r < 1:
        raise ValueError(f"bad rank {r}")
    return (r + 1) // 2 if r % 2 else -(r // 2)


def format_letter(x: int) -> str:
    return str(x) if x > 0 else f"{-x}b"


_LETTER_RE = re.compile(r"^(\d+)(b?)$")


def parse_letter(tok: str) -> int:
    m = _LETTER_RE.match(tok)
    if not m or int(m.group(1)) == 0:
        raise ValueError(f"bad letter {tok!r}")
    val = int(m.group(1))
    return -val if m.group(2) else val


# ---------------------------------------------------------------------------
# semistandard tableaux (positive int entries)


@dataclass(frozen=True)
class Tableau:
    """Semistandard Young tableau: weakly increasing rows, strict columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        shape = tuple(len(r) for r in self.rows)
        normalize_partition(shape)
        if any(len(r) == 0 for r in self.rows):
            raise ValueError("empty row in tableau")
        for r in self.rows:
            if any(x < 1 for x in r):
                raise ValueError(f"nonpositive entry in row {r}")
            if any(a > b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not weakly increasing")
        for i in range(1, len(self.rows)):
            upper, lower = self.rows[i - 1], self.rows[i]
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError("columns are not strictly increasing")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> Iterator[int]:
        for r in self.rows:
            yield from r

    def reading_word(self) -> tuple[int, ...]:
        """Rows read top to bottom, each row right to left."""
        return tuple(x for r in self.rows for x in reversed(r))

    def content(self, m: int) -> tuple[int, ...]:
        """Multiplicity vector of the letters 1..m."""
        counts = [0] * m
        for x in self.entries():
            if x > m:
                raise ValueError(f"entry {x} exceeds alphabet size {m}")
            counts[x - 1] += 1
        return tuple(counts)

    def __str__(self) -> str:
        return "/".join(" ".join(str(x) for x in r) for r in self.rows)


EMPTY_TABLEAU = Tableau(())


def tableaux_of_shape(mu: Partition, letters: int) -> Iterator[Tableau]:
    """All semistandard tableaux of shape ``mu`` with entries in ``1..letters``."""
    mu = normalize_partition(mu)
    if not mu:
        yield EMPTY_TABLEAU
        return
    rows: list[list[int]] = [[0] * p for p in mu]

    def fill(cells: list[tuple[int, int]], k: int) -> Iterator[Tableau]:
        if k == len(cells):
            yield Tableau(tuple(tuple(r) for r in rows))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, letters + 1):
            rows[i][j] = v
            yield from fill(cells, k + 1)

    cell_list = [(i, j) for i, p in enumerate(mu) for j in range(p)]
    yield from fill(cell_list, 0)


# ---------------------------------------------------------------------------
# King tableaux


@dataclass(frozen=True)
class KingTableau:
    """Symplectic tableau over the barred alphabet.

    Rows weakly increase and columns strictly increase in the barred order,
    and every entry in row ``i`` is at least the plain letter ``i``.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        normalize_partition(tuple(len(r) for r in self.rows))
        if any(len(r) == 0 for r in self.rows):
            raise ValueError("empty row in tableau")
        for i, row in enumerate(self.rows, start=1):
            ranks = [letter_rank(x) for x in row]
            if any(a > b for a, b in zip(ranks, ranks[1:])):
                raise ValueError(f"row {row} is not weakly increasing")
            if ranks and ranks[0] < letter_rank(i):
                raise ValueError(f"row {i} has an entry below the letter {i}")
        for i in range(1, len(self.rows)):
            upper, lower = self.rows[i - 1], self.rows[i]
            for j in range(len(lower)):
                if letter_rank(upper[j]) >= letter_rank(lower[j]):
                    raise ValueError("columns are not strictly increasing")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def max_letter(self) -> int:
        return max((abs(x) for r in self.rows for x in r), default=0)

    def subshape(self, max_rank: int) -> Partition:
        """Shape of the cells whose letter has rank at most ``max_rank``."""
        return normalize_partition(
            sum(1 for x in r if letter_rank(x) <= max_rank) for r in self.rows
        )

    def letter_columns(self, x: int) -> set[int]:
        """1-based column indices of the cells containing the letter ``x``."""
        return {j + 1 for r in self.rows for j, y in enumerate(r) if y == x}

    def reading_ranks(self) -> tuple[int, ...]:
        return tuple(letter_rank(x) for r in self.rows for x in r)

    def __str__(self) -> str:
        return "/".join(" ".join(format_letter(x) for x in r) for r in self.rows)


def king_weight(t: KingTableau, m: int) -> Weight:
    """Weight of a King tableau: coordinate ``i`` counts ``i`` minus barred ``i``."""
    if t.max_letter > m:
        raise ValueError(f"letters exceed rank {m}")
    w = [0] * m
    for r in t.rows:
        for x in r:
            w[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(w)


def enumerate_king(mu: Partition, m: int) -> list[KingTableau]:
    """All King tableaux of shape ``mu`` with letters at most barred ``m``.

    Ordered lexicographically by the row reading word in the barred order.
    """
    mu = normalize_partition(mu)
    if len(mu) > m:
        raise ValueError(f"shape {mu} has more than {m} rows")
    if not mu:
        return [KingTableau(())]
    grid: list[list[int]] = [[0] * p for p in mu]
    out: list[KingTableau] = []
    cells = [(i, j) for i, p in enumerate(mu) for j in range(p)]

    def fill(k: int) -> None:
        if k == len(cells):
            out.append(
                KingTableau(tuple(tuple(rank_letter(r) for r in row) for row in grid))
            )
            return
        i, j = cells[k]
        lo = 2 * (i + 1) - 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, 2 * m + 1):
            grid[i][j] = v
            fill(k + 1)

    fill(0)
    return out


def king_to_text(t: KingTableau) -> str:
    """One row per line, letters like ``2`` and ``2b`` separated by spaces."""
    return "\n".join(" ".join(format_letter(x) for x in r) for r in t.rows)


def king_from_text(text: str) -> KingTableau:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        rows.append(tuple(parse_letter(tok) for tok in line.split()))
    return KingTableau(tuple(rows))
