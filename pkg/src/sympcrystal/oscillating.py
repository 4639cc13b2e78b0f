"""Oscillating horizontal strips and semistandard oscillating tableaux.

An oscillating horizontal strip walks from an inside shape up to a peak shape
(box additions) and back down to an outside shape (box removals), touching a
partition at every step, with both skew pieces horizontal strips.  It is
stored as the inside shape plus the signed word of row indices: ``+r`` adds a
box in row ``r``, ``-r`` removes one, and the word weakly decreases as signed
ints — which makes it the unique such word for its (inside, peak, outside)
triple.

A semistandard oscillating tableau (SSOT) is a chain of these strips, each
starting where the previous one ended.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .tableaux import (
    Partition,
    add_box,
    contains,
    format_letter,
    is_horizontal_strip,
    normalize_partition,
    parse_letter,
    remove_box,
)


@dataclass(frozen=True)
class OscStrip:
    inside: Partition
    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "inside", normalize_partition(self.inside))
        object.__setattr__(self, "word", tuple(int(x) for x in self.word))
        if any(a < b for a, b in zip(self.word, self.word[1:])):
            raise ValueError(f"word {self.word} is not weakly decreasing")
        if any(x == 0 for x in self.word):
            raise ValueError("0 is not a row index")
        self.sequence()  # replay to validate every step

    def sequence(self) -> tuple[Partition, ...]:
        """Every partition the strip touches, inside first."""
        shapes = [self.inside]
        cur = self.inside
        for s in self.word:
            cur = add_box(cur, s) if s > 0 else remove_box(cur, -s)
            shapes.append(cur)
        return tuple(shapes)

    @property
    def outside(self) -> Partition:
        return self.sequence()[-1]

    @property
    def star(self) -> Partition:
        """The peak shape, after all additions."""
        cur = self.inside
        for s in self.word:
            if s < 0:
                break
            cur = add_box(cur, s)
        return cur

    @property
    def size(self) -> int:
        return len(self.word)

    @property
    def num_cols(self) -> int:
        return self.star[0] if self.star else 0

    def additions(self) -> Counter:
        """Multiset of rows receiving a box."""
        return Counter(s for s in self.word if s > 0)

    def removals(self) -> Counter:
        """Multiset of rows losing a box."""
        return Counter(-s for s in self.word if s < 0)

    @classmethod
    def from_partitions(
        cls, inside: Partition, star: Partition, outside: Partition
    ) -> "OscStrip":
        """The unique strip with this inside, peak, and outside."""
        inside = normalize_partition(inside)
        star = normalize_partition(star)
        outside = normalize_partition(outside)
        if not is_horizontal_strip(star, inside):
            raise ValueError(f"{star}/{inside} is not a horizontal strip")
        if not is_horizontal_strip(star, outside):
            raise ValueError(f"{star}/{outside} is not a horizontal strip")
        return cls.from_row_multisets(
            inside, _row_multiset(star, inside), _row_multiset(star, outside)
        )

    @classmethod
    def from_row_multisets(
        cls, inside: Partition, adds: Counter, removes: Counter
    ) -> "OscStrip":
        """Strip with the given addition and removal rows; raises if invalid."""
        word = sorted(adds.elements(), reverse=True) + sorted(
            (-r for r in removes.elements()), reverse=True
        )
        return cls(inside, tuple(word))

    def __str__(self) -> str:
        return "(" + " ".join(format_letter(s) for s in self.word) + ")"


def _row_multiset(outer: Partition, inner: Partition) -> Counter:
    inner = inner + (0,) * (len(outer) - len(inner))
    return Counter(
        {r + 1: outer[r] - inner[r] for r in range(len(outer)) if outer[r] > inner[r]}
    )


@dataclass(frozen=True)
class SSOT:
    """Chain of oscillating horizontal strips, each picking up where the last ended."""

    strips: tuple[OscStrip, ...]

    def __post_init__(self):
        object.__setattr__(self, "strips", tuple(self.strips))
        for a, b in zip(self.strips, self.strips[1:]):
            if a.outside != b.inside:
                raise ValueError(
                    f"strips do not chain: {a.outside} then inside {b.inside}"
                )

    @property
    def inside(self) -> Partition:
        return self.strips[0].inside if self.strips else ()

    @property
    def outside(self) -> Partition:
        return self.strips[-1].outside if self.strips else ()

    @property
    def length(self) -> int:
        return len(self.strips)

    @property
    def num_cols(self) -> int:
        """Largest column count reached by any strip's peak shape."""
        return max((s.num_cols for s in self.strips), default=0)

    def weight(self) -> tuple[int, ...]:
        """Strip sizes."""
        return tuple(s.size for s in self.strips)

    def crystal_weight(self, g: int) -> tuple[int, ...]:
        """Coordinate i is g minus the size of strip i+1."""
        return tuple(g - s.size for s in self.strips)

    def chain(self) -> tuple[Partition, ...]:
        """Every partition touched, junction shapes listed once."""
        shapes: list[Partition] = [self.inside]
        for s in self.strips:
            shapes.extend(s.sequence()[1:])
        return tuple(shapes)

    def replace(self, k: int, *new_strips: OscStrip) -> "SSOT":
        """Copy with strips k..k+len(new_strips)-1 (0-based) replaced."""
        parts = (
            self.strips[:k] + tuple(new_strips) + self.strips[k + len(new_strips) :]
        )
        return SSOT(parts)

    def __str__(self) -> str:
        return "".join(str(s) for s in self.strips)


def ssot_to_text(t: SSOT) -> str:
    return str(t)


def ssot_from_text(text: str, inside: Partition = ()) -> SSOT:
    """Parse ``(1 1b)(2 1)...``; ``inside`` is the starting shape."""
    text = text.strip()
    if not text:
        raise ValueError("empty tableau text")
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"expected parenthesised strips, got {text!r}")
    strips: list[OscStrip] = []
    cur = normalize_partition(inside)
    for chunk in text[1:-1].split(")("):
        toks = chunk.split()
        word = tuple(parse_letter(tok) for tok in toks)
        strip = OscStrip(cur, word)
        strips.append(strip)
        cur = strip.outside
    return SSOT(tuple(strips))


# ---------------------------------------------------------------------------
# enumeration


def peaks_above(inside: Partition, max_cols: int) -> Iterator[Partition]:
    """Shapes reachable from ``inside`` by a horizontal strip, first part <= max_cols."""
    if inside and inside[0] > max_cols:
        return
    rows = len(inside) + 1
    padded = inside + (0,)

    def rec(r: int) -> Iterator[tuple[int, ...]]:
        if r == rows:
            yield ()
            return
        hi = max_cols if r == 0 else padded[r - 1]
        for v in range(padded[r], hi + 1):
            for rest in rec(r + 1):
                yield (v, *rest)

    for shape in rec(0):
        yield normalize_partition(shape)


def drops_below(star: Partition) -> Iterator[Partition]:
    """Shapes reachable from ``star`` by removing a horizontal strip."""
    padded = star + (0,)

    def rec(r: int) -> Iterator[tuple[int, ...]]:
        if r == len(star):
            yield ()
            return
        for v in range(padded[r + 1], star[r] + 1):
            for rest in rec(r + 1):
                yield (v, *rest)

    for shape in rec(0):
        yield normalize_partition(shape)


def enumerate_strips(
    inside: Partition, max_cols: int, size: int | None = None
) -> list[OscStrip]:
    """All strips from ``inside`` whose peak has at most ``max_cols`` columns."""
    inside = normalize_partition(inside)
    out = []
    for star in peaks_above(inside, max_cols):
        for outside in drops_below(star):
            strip = OscStrip.from_partitions(inside, star, outside)
            if size is None or strip.size == size:
                out.append(strip)
    out.sort(key=lambda s: (s.word, s.outside))
    return out


def enumerate_ssot(
    outside: Partition,
    m: int,
    g: int,
    inside: Partition = (),
    weight: tuple[int, ...] | None = None,
) -> list[SSOT]:
    """All SSOT with ``m`` strips from ``inside`` to ``outside``, peaks <= g columns.

    ``weight`` fixes each strip's size when given.
    """
    outside = normalize_partition(outside)
    inside = normalize_partition(inside)
    if weight is not None and len(weight) != m:
        raise ValueError("weight length must equal the number of strips")
    out: list[SSOT] = []

    def rec(k: int, cur: Partition, acc: list[OscStrip]) -> None:
        if k == m:
            if cur == outside:
                out.append(SSOT(tuple(acc)))
            return
        for strip in enumerate_strips(
            cur, g, None if weight is None else weight[k]
        ):
            acc.append(strip)
            rec(k + 1, strip.outside, acc)
            acc.pop()

    rec(0, inside, [])
    return out
