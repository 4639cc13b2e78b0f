"""Raising/lowering operators on the three models, plus graph machinery.

Index 0 is the long-root direction: it touches only the first strip of an
oscillating tableau (equivalently the top-left matrix entry).  Indices
1..m-1 form a type-A chain and act through a bracket pairing of row
multisets at the junction of two consecutive strips.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field

from .oscillating import SSOT, OscStrip
from .rsk import (
    Matrix,
    c_index,
    matrix,
    row_sums,
    rsk_column,
    rsk_column_inverse,
    transpose_matrix,
)
from .tableaux import (
    KingTableau,
    Tableau,
    Weight,
    coroot_pairing,
    king_weight,
    simple_root,
)
from .bijections import psi, psi_inverse

# ---------------------------------------------------------------------------
# multiset arithmetic (Counters over int)


def multiset_up(a: Counter, b: Counter) -> Counter:
    """(a minus b) together with the overlap shifted up by one."""
    overlap = a & b
    return +((a - b) + Counter({k + 1: v for k, v in overlap.items()}))


def multiset_down(a: Counter, b: Counter) -> Counter:
    """(a minus b) together with the overlap shifted down by one."""
    overlap = a & b
    return +((a - b) + Counter({k - 1: v for k, v in overlap.items()}))


def pair_multisets(c: Counter, d: Counter) -> tuple[list[int], list[int]]:
    """Bracket-pair each q in d with some p in c, p < q; return the leftovers.

    This is matching in the word that lists all elements by increasing value
    with d-elements first at ties: scanning q upward, each q closes the
    largest still-open p below it.  (Scanning downward instead picks a
    matching of the same size but the wrong residue.)  Returns (unpaired c,
    unpaired d), each ascending; every leftover on the c side is >= every
    leftover on the d side.
    """
    avail = sorted(c.elements())
    left_d: list[int] = []
    for q in sorted(d.elements()):
        k = bisect_left(avail, q) - 1
        if k >= 0:
            avail.pop(k)
        else:
            left_d.append(q)
    return avail, left_d


# ---------------------------------------------------------------------------
# type-A operators on semistandard tableaux


def _ssyt_scan(t: Tableau, i: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Cells holding unpaired i / i+1, in reading order.

    Reading rows top to bottom and right to left, each i+1 cancels the most
    recently seen uncancelled i.
    """
    opens: list[tuple[int, int]] = []
    closes: list[tuple[int, int]] = []
    for r, row in enumerate(t.rows):
        for c in range(len(row) - 1, -1, -1):
            v = row[c]
            if v == i:
                opens.append((r, c))
            elif v == i + 1:
                if opens:
                    opens.pop()
                else:
                    closes.append((r, c))
    return opens, closes


def _ssyt_set(t: Tableau, cell: tuple[int, int], value: int) -> Tableau:
    rows = [list(row) for row in t.rows]
    rows[cell[0]][cell[1]] = value
    return Tableau(tuple(tuple(row) for row in rows))


def ssyt_raise(t: Tableau, i: int) -> Tableau | None:
    """Turn the last unpaired i+1 into an i; None if there is none."""
    _, closes = _ssyt_scan(t, i)
    if not closes:
        return None
    return _ssyt_set(t, closes[-1], i)


def ssyt_lower(t: Tableau, i: int) -> Tableau | None:
    """Turn the first unpaired i into an i+1; None if there is none."""
    opens, _ = _ssyt_scan(t, i)
    if not opens:
        return None
    return _ssyt_set(t, opens[0], i + 1)


def ssyt_eps(t: Tableau, i: int) -> int:
    return len(_ssyt_scan(t, i)[1])


def ssyt_phi(t: Tableau, i: int) -> int:
    return len(_ssyt_scan(t, i)[0])


# ---------------------------------------------------------------------------
# operators on oscillating tableaux


def strip_pair_multisets(t: SSOT, i: int) -> tuple[Counter, Counter]:
    """Signed row multisets compared at junction i (1-based strips i, i+1).

    Removal rows of strip i and addition rows of strip i+1 overlap in the
    junction shape, so each side is shifted up past the other before being
    negated/merged.  Sizes come out as the two strip sizes.
    """
    lo, hi = t.strips[i - 1], t.strips[i]
    bar_removes = multiset_up(lo.removals(), hi.additions())
    bar_adds = multiset_up(hi.additions(), lo.removals())
    c = Counter(lo.additions()) + Counter({-r: v for r, v in bar_removes.items()})
    d = Counter(bar_adds) + Counter({-r: v for r, v in hi.removals().items()})
    return c, d


def _rebuild_junction(t: SSOT, i: int, c: Counter, d: Counter) -> SSOT:
    """Strips i, i+1 recovered from modified junction multisets."""
    c, d = +c, +d
    adds_lo = Counter({r: v for r, v in c.items() if r > 0})
    bar_removes = Counter({-r: v for r, v in c.items() if r < 0})
    bar_adds = Counter({r: v for r, v in d.items() if r > 0})
    removes_hi = Counter({-r: v for r, v in d.items() if r < 0})
    lo = OscStrip.from_row_multisets(
        t.strips[i - 1].inside, adds_lo, multiset_down(bar_removes, bar_adds)
    )
    hi = OscStrip.from_row_multisets(
        lo.outside, multiset_down(bar_adds, bar_removes), removes_hi
    )
    if hi.outside != t.strips[i].outside:
        raise ValueError("junction surgery changed the outer shape")
    return t.replace(i - 1, lo, hi)


def _first_strip_counts(t: SSOT) -> tuple[int, int]:
    if t.inside != ():
        raise ValueError("index 0 acts only on tableaux that start empty")
    if not t.strips:
        raise ValueError("no strips")
    first = t.strips[0]
    return first.additions()[1], first.removals()[1]


def _check_junction_index(t: SSOT, i: int) -> None:
    if not 1 <= i <= len(t.strips) - 1:
        raise ValueError(f"index {i} out of range for {len(t.strips)} strips")


def ssot_raise(t: SSOT, i: int) -> SSOT | None:
    """Raising operator; index 0 deletes a (1,-1) pair from the first strip,
    index i >= 1 moves the largest unpaired junction element leftward."""
    if i == 0:
        a, b = _first_strip_counts(t)
        if b == 0:
            return None
        word = (1,) * (a - 1) + (-1,) * (b - 1)
        return t.replace(0, OscStrip((), word))
    _check_junction_index(t, i)
    c, d = strip_pair_multisets(t, i)
    _, left_d = pair_multisets(c, d)
    if not left_d:
        return None
    q = left_d[-1]
    c[q] += 1
    d[q] -= 1
    return _rebuild_junction(t, i, c, d)


def ssot_lower(t: SSOT, i: int, g: int) -> SSOT | None:
    """Lowering operator; index 0 appends a (1,-1) pair to the first strip
    (None once it holds g additions), index i >= 1 moves the smallest
    unpaired junction element rightward."""
    if i == 0:
        a, b = _first_strip_counts(t)
        if a >= g:
            return None
        word = (1,) * (a + 1) + (-1,) * (b + 1)
        return t.replace(0, OscStrip((), word))
    _check_junction_index(t, i)
    c, d = strip_pair_multisets(t, i)
    left_c, _ = pair_multisets(c, d)
    if not left_c:
        return None
    p = left_c[0]
    c[p] -= 1
    d[p] += 1
    return _rebuild_junction(t, i, c, d)


def ssot_stats(t: SSOT, i: int, g: int) -> tuple[int, int]:
    """(epsilon, phi): how often raise/lower apply before hitting None."""
    if i == 0:
        a, b = _first_strip_counts(t)
        return b, g - a
    _check_junction_index(t, i)
    left_c, left_d = pair_multisets(*strip_pair_multisets(t, i))
    return len(left_d), len(left_c)


# ---------------------------------------------------------------------------
# operators on nonnegative-integer matrices


def _matrix_op_checks(m: Matrix, i: int, g: int) -> None:
    if not 0 <= i <= len(m) - 1:
        raise ValueError(f"index {i} out of range for a {len(m)}-row matrix")
    if c_index(m) > 2 * g:
        raise ValueError("matrix has more than 2g weakly decreasing positions")


def _adjust_corner(m: Matrix, delta: int) -> Matrix:
    rows = [list(r) for r in m]
    rows[0][0] += delta
    return matrix(rows)


def matrix_raise(m: Matrix, i: int, g: int) -> Matrix | None:
    """Index 0 removes two units from the top-left entry; index i >= 1 acts
    through the type-A raise on both insertion and recording tableaux."""
    _matrix_op_checks(m, i, g)
    if i == 0:
        return _adjust_corner(m, -2) if m[0][0] >= 2 else None
    p, q = rsk_column(m)
    p2, q2 = ssyt_raise(p, i), ssyt_raise(q, i)
    if p2 is None or q2 is None:
        return None
    return rsk_column_inverse(p2, q2, len(m), len(m[0]))


def matrix_lower(m: Matrix, i: int, g: int) -> Matrix | None:
    """Index 0 adds two units to the top-left entry (None when that would
    push the tableau pair past 2g columns); index i >= 1 lowers both."""
    _matrix_op_checks(m, i, g)
    if i == 0:
        out = _adjust_corner(m, 2)
        return out if c_index(out) <= 2 * g else None
    p, q = rsk_column(m)
    p2, q2 = ssyt_lower(p, i), ssyt_lower(q, i)
    if p2 is None or q2 is None:
        return None
    return rsk_column_inverse(p2, q2, len(m), len(m[0]))


def matrix_eps(m: Matrix, i: int, g: int) -> int:
    _matrix_op_checks(m, i, g)
    if i == 0:
        return m[0][0] // 2
    return ssyt_eps(rsk_column(m)[0], i)


def matrix_phi(m: Matrix, i: int, g: int) -> int:
    _matrix_op_checks(m, i, g)
    if i == 0:
        return m[0][0] // 2 + g - row_sums(m)[0]
    return ssyt_phi(rsk_column(m)[0], i)


def matrix_weight(m: Matrix, g: int) -> Weight:
    """Coordinate i is g minus the i-th row sum."""
    return tuple(g - s for s in row_sums(m))


# two-line-array surgery: an independent route to the same operators


def _row_junction_multisets(m: Matrix, i: int) -> tuple[Counter, Counter]:
    c = Counter({j + 1: m[i - 1][j] for j in range(len(m[i - 1])) if m[i - 1][j]})
    d = Counter({j + 1: m[i][j] for j in range(len(m[i])) if m[i][j]})
    return c, d


def _move_unit(m: Matrix, src: int, dst: int, col: int) -> Matrix:
    rows = [list(r) for r in m]
    rows[src][col - 1] -= 1
    rows[dst][col - 1] += 1
    return matrix(rows)


def surgery_raise_rows(m: Matrix, i: int) -> Matrix | None:
    """Move one unit from row i+1 up to row i (1-based), in the column of
    the largest unpaired entry under the junction bracket pairing."""
    c, d = _row_junction_multisets(m, i)
    _, left_d = pair_multisets(c, d)
    if not left_d:
        return None
    return _move_unit(m, i, i - 1, left_d[-1])


def surgery_lower_rows(m: Matrix, i: int) -> Matrix | None:
    """Move one unit from row i down to row i+1, in the column of the
    smallest unpaired entry."""
    c, d = _row_junction_multisets(m, i)
    left_c, _ = pair_multisets(c, d)
    if not left_c:
        return None
    return _move_unit(m, i - 1, i, left_c[0])


def _transposed(op, m: Matrix, i: int) -> Matrix | None:
    out = op(transpose_matrix(m), i)
    return None if out is None else transpose_matrix(out)


def matrix_raise_surgery(m: Matrix, i: int) -> Matrix | None:
    """Row surgery then column surgery; agrees with matrix_raise for i >= 1."""
    step = surgery_raise_rows(m, i)
    return None if step is None else _transposed(surgery_raise_rows, step, i)


def matrix_lower_surgery(m: Matrix, i: int) -> Matrix | None:
    step = surgery_lower_rows(m, i)
    return None if step is None else _transposed(surgery_lower_rows, step, i)


def locality_mask(m: Matrix, i: int) -> Matrix:
    """The part of the matrix (1-based rows/columns) that junction i sees.

    Rows above i vanish; inside rows i, i+1 only the lower triangle
    survives, with the diagonal halved; below that block only the columns
    up to i+1 remain.
    """
    n = len(m)
    rows = []
    for p in range(1, n + 1):
        row = []
        for q in range(1, n + 1):
            v = m[p - 1][q - 1]
            if p < i or (p > i + 1 and q > i + 1) or (p in (i, i + 1) and q > p):
                row.append(0)
            elif p in (i, i + 1) and q == p:
                row.append(v // 2)
            else:
                row.append(v)
        rows.append(row)
    return matrix(rows)


# ---------------------------------------------------------------------------
# uniform adapters


@dataclass(frozen=True)
class SsotCrystal:
    """Oscillating tableaux with m strips, peaks at most g columns wide."""

    m: int
    g: int

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(self.m))

    def e(self, x: SSOT, i: int) -> SSOT | None:
        return ssot_raise(x, i)

    def f(self, x: SSOT, i: int) -> SSOT | None:
        return ssot_lower(x, i, self.g)

    def eps(self, x: SSOT, i: int) -> int:
        return ssot_stats(x, i, self.g)[0]

    def phi(self, x: SSOT, i: int) -> int:
        return ssot_stats(x, i, self.g)[1]

    def weight(self, x: SSOT) -> Weight:
        return x.crystal_weight(self.g)


@dataclass(frozen=True)
class MatrixCrystal:
    """Symmetric even-diagonal m-by-m matrices with at most 2g columns
    after insertion."""

    m: int
    g: int

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(self.m))

    def e(self, x: Matrix, i: int) -> Matrix | None:
        return matrix_raise(x, i, self.g)

    def f(self, x: Matrix, i: int) -> Matrix | None:
        return matrix_lower(x, i, self.g)

    def eps(self, x: Matrix, i: int) -> int:
        return matrix_eps(x, i, self.g)

    def phi(self, x: Matrix, i: int) -> int:
        return matrix_phi(x, i, self.g)

    def weight(self, x: Matrix) -> Weight:
        return matrix_weight(x, self.g)


@dataclass(frozen=True)
class KingCrystal:
    """King tableaux on m barred letters, shapes inside an m-by-g box,
    carried over from the oscillating model."""

    m: int
    g: int

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(self.m))

    def _carry(self, x: KingTableau, op, i: int):
        out = op(psi(x, self.m, self.g), i)
        return None if out is None else psi_inverse(out, self.g)

    def e(self, x: KingTableau, i: int) -> KingTableau | None:
        return self._carry(x, ssot_raise, i)

    def f(self, x: KingTableau, i: int) -> KingTableau | None:
        return self._carry(x, lambda t, j: ssot_lower(t, j, self.g), i)

    def eps(self, x: KingTableau, i: int) -> int:
        return ssot_stats(psi(x, self.m, self.g), i, self.g)[0]

    def phi(self, x: KingTableau, i: int) -> int:
        return ssot_stats(psi(x, self.m, self.g), i, self.g)[1]

    def weight(self, x: KingTableau) -> Weight:
        return king_weight(x, self.m)


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class CrystalGraph:
    """Lowering edges (src, i, dst) over a deterministically ordered vertex
    list; weights are per-vertex."""

    vertices: tuple
    edges: tuple[tuple[int, int, int], ...]
    weights: tuple[Weight, ...]
    indices: tuple[int, ...]
    _pos: dict = field(compare=False, repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_pos", {v: k for k, v in enumerate(self.vertices)})

    def index(self, x) -> int:
        return self._pos[x]

    def highest_weight_vertices(self) -> tuple:
        """Vertices with no incoming lowering edge."""
        targets = {dst for _, _, dst in self.edges}
        return tuple(v for k, v in enumerate(self.vertices) if k not in targets)

    def components(self) -> tuple[tuple, ...]:
        nbr: dict[int, set[int]] = {k: set() for k in range(len(self.vertices))}
        for src, _, dst in self.edges:
            nbr[src].add(dst)
            nbr[dst].add(src)
        seen: set[int] = set()
        comps = []
        for k in range(len(self.vertices)):
            if k in seen:
                continue
            stack, comp = [k], []
            seen.add(k)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in nbr[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(self.vertices[u] for u in sorted(comp)))
        return tuple(comps)


def crystal_graph(crystal, seeds, indices=None) -> CrystalGraph:
    """Closure of the seeds under both operator directions.

    Raises if a lowering edge fails to invert — that is never legitimate.
    """
    if indices is None:
        indices = crystal.indices
    order: dict = {}
    frontier = sorted(seeds, key=str)
    for x in frontier:
        order.setdefault(x, len(order))
    edges: list[tuple[int, int, int]] = []
    while frontier:
        next_frontier = []
        for x in frontier:
            for i in indices:
                y = crystal.f(x, i)
                if y is not None:
                    if crystal.e(y, i) != x:
                        raise ValueError(f"lowering at {i} does not invert: {x}")
                    if y not in order:
                        order[y] = len(order)
                        next_frontier.append(y)
                    edges.append((order[x], i, order[y]))
                z = crystal.e(x, i)
                if z is not None and z not in order:
                    order[z] = len(order)
                    next_frontier.append(z)
                    # its lowering edge back to x is recorded when z expands
        frontier = sorted(next_frontier, key=str)
    vertices = tuple(order)
    return CrystalGraph(
        vertices=vertices,
        edges=tuple(sorted(set(edges))),
        weights=tuple(crystal.weight(v) for v in vertices),
        indices=tuple(indices),
    )


def decompose(graph: CrystalGraph) -> Counter:
    """Multiset of highest weights, one per source vertex."""
    return Counter(
        graph.weights[graph.index(v)] for v in graph.highest_weight_vertices()
    )


def graph_to_adjacency(graph: CrystalGraph, label=str) -> str:
    lines = [
        f"{label(graph.vertices[src])} -{i}-> {label(graph.vertices[dst])}"
        for src, i, dst in graph.edges
    ]
    return "\n".join(lines)


def graph_to_dot(graph: CrystalGraph, label=str) -> str:
    out = ["digraph crystal {"]
    for k, v in enumerate(graph.vertices):
        text = label(v).replace('"', r"\"")
        out.append(f'  v{k} [label="{text}"];')
    for src, i, dst in graph.edges:
        out.append(f'  v{src} -> v{dst} [label="{i}"];')
    out.append("}")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# structural checks


def iterated_eps(crystal, x, i: int) -> int:
    k = 0
    while (x := crystal.e(x, i)) is not None:
        k += 1
    return k


def iterated_phi(crystal, x, i: int) -> int:
    k = 0
    while (x := crystal.f(x, i)) is not None:
        k += 1
    return k


def axiom_violations(crystal, vertices) -> list[str]:
    """Mutual inversion, weight shifts, the phi - eps pairing, and the
    agreement of closed-form statistics with iterated counts."""
    bad: list[str] = []
    m = crystal.m
    for x in vertices:
        wx = crystal.weight(x)
        for i in crystal.indices:
            eps, phi = crystal.eps(x, i), crystal.phi(x, i)
            alpha = simple_root(i, m)
            if phi - eps != coroot_pairing(wx, i):
                bad.append(f"phi-eps mismatch at index {i}: {x}")
            if eps != iterated_eps(crystal, x, i):
                bad.append(f"eps is not the iterated count at index {i}: {x}")
            if phi != iterated_phi(crystal, x, i):
                bad.append(f"phi is not the iterated count at index {i}: {x}")
            y = crystal.e(x, i)
            if y is not None:
                if crystal.f(y, i) != x:
                    bad.append(f"raise at {i} does not invert: {x}")
                if crystal.weight(y) != tuple(a + b for a, b in zip(wx, alpha)):
                    bad.append(f"raise at {i} has the wrong weight shift: {x}")
            if (y is not None) != (eps > 0):
                bad.append(f"raise at {i} disagrees with eps: {x}")
            z = crystal.f(x, i)
            if z is not None:
                if crystal.e(z, i) != x:
                    bad.append(f"lower at {i} does not invert: {x}")
                if crystal.weight(z) != tuple(a - b for a, b in zip(wx, alpha)):
                    bad.append(f"lower at {i} has the wrong weight shift: {x}")
            if (z is not None) != (phi > 0):
                bad.append(f"lower at {i} disagrees with phi: {x}")
    return bad


def stembridge_violations(crystal, vertices, indices=None) -> list[str]:
    """The local type-A axioms on the chosen indices (all >= 1): the
    dichotomy for neighbouring indices, the commutation rules, and their
    lowering-side duals; distant indices must commute and leave each
    other's statistics alone."""
    if indices is None:
        indices = [i for i in crystal.indices if i >= 1]
    if any(i < 1 for i in indices):
        raise ValueError("checks apply to indices >= 1 only")
    bad: list[str] = []
    for x in vertices:
        for i in indices:
            for j in indices:
                if i == j:
                    continue
                if abs(i - j) >= 2:
                    bad.extend(_check_distant(crystal, x, i, j))
                else:
                    bad.extend(_check_adjacent(crystal, x, i, j))
    return bad


def _check_distant(crystal, x, i: int, j: int) -> list[str]:
    bad = []
    y = crystal.e(x, i)
    if y is not None:
        if crystal.eps(y, j) != crystal.eps(x, j) or crystal.phi(y, j) != crystal.phi(x, j):
            bad.append(f"distant raise {i} moved the {j} statistics: {x}")
        z = crystal.e(x, j)
        if z is not None and crystal.e(y, j) != crystal.e(z, i):
            bad.append(f"distant raises {i},{j} do not commute: {x}")
    u = crystal.f(x, i)
    if u is not None:
        if crystal.eps(u, j) != crystal.eps(x, j) or crystal.phi(u, j) != crystal.phi(x, j):
            bad.append(f"distant lower {i} moved the {j} statistics: {x}")
        w = crystal.f(x, j)
        if w is not None and crystal.f(u, j) != crystal.f(w, i):
            bad.append(f"distant lowers {i},{j} do not commute: {x}")
    return bad


def _check_adjacent(crystal, x, i: int, j: int) -> list[str]:
    bad = []
    ei_x = crystal.e(x, i)
    if ei_x is not None:
        de = crystal.eps(ei_x, j) - crystal.eps(x, j)
        dp = crystal.phi(ei_x, j) - crystal.phi(x, j)
        if (de, dp) not in {(0, -1), (1, 0)}:
            bad.append(f"raise {i} broke the {j} dichotomy: {x}")
        if de == 0 and crystal.eps(x, j) > 0:
            # raising i left the j statistics alone: the two raises commute
            # and raising j bumps eps_i without touching phi_i
            ej_x = crystal.e(x, j)
            if ej_x is None or crystal.e(ej_x, i) != crystal.e(ei_x, j):
                bad.append(f"raises {i},{j} do not commute: {x}")
            elif crystal.phi(ej_x, i) != crystal.phi(x, i):
                bad.append(f"raise {j} moved phi_{i}: {x}")
            elif crystal.eps(ej_x, i) != crystal.eps(x, i) + 1:
                bad.append(f"raise {j} did not bump eps_{i}: {x}")
    ej_x = crystal.e(x, j)
    if ej_x is not None and crystal.eps(ej_x, i) == crystal.eps(x, i) + 1:
        eiej = crystal.e(ej_x, i)
        if eiej is None or crystal.eps(eiej, j) != crystal.eps(x, j) - 1:
            bad.append(f"raise pair {i},{j} did not drop eps_{j}: {x}")
    fi_x = crystal.f(x, i)
    if fi_x is not None:
        dp = crystal.phi(fi_x, j) - crystal.phi(x, j)
        de = crystal.eps(fi_x, j) - crystal.eps(x, j)
        if (dp, de) not in {(0, -1), (1, 0)}:
            bad.append(f"lower {i} broke the {j} dichotomy: {x}")
        if dp == 0 and crystal.phi(x, j) > 0:
            fj_x = crystal.f(x, j)
            if fj_x is None or crystal.f(fj_x, i) != crystal.f(fi_x, j):
                bad.append(f"lowers {i},{j} do not commute: {x}")
            elif crystal.eps(fj_x, i) != crystal.eps(x, i):
                bad.append(f"lower {j} moved eps_{i}: {x}")
            elif crystal.phi(fj_x, i) != crystal.phi(x, i) + 1:
                bad.append(f"lower {j} did not bump phi_{i}: {x}")
    fj_x = crystal.f(x, j)
    if fj_x is not None and crystal.phi(fj_x, i) == crystal.phi(x, i) + 1:
        fifj = crystal.f(fj_x, i)
        if fifj is None or crystal.phi(fifj, j) != crystal.phi(x, j) - 1:
            bad.append(f"lower pair {i},{j} did not drop phi_{j}: {x}")
    return bad
