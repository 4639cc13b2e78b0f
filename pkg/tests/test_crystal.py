import random
from collections import Counter
from dataclasses import dataclass

import pytest
from hypothesis import given, strategies as st

from sympcrystal.bijections import phi as phi_map
from sympcrystal.bijections import psi
from sympcrystal.crystal import (
    CrystalGraph,
    KingCrystal,
    MatrixCrystal,
    SsotCrystal,
    axiom_violations,
    crystal_graph,
    decompose,
    graph_to_adjacency,
    graph_to_dot,
    locality_mask,
    matrix_eps,
    matrix_lower,
    matrix_lower_surgery,
    matrix_phi,
    matrix_raise,
    matrix_raise_surgery,
    matrix_weight,
    multiset_down,
    multiset_up,
    pair_multisets,
    ssot_lower,
    ssot_raise,
    ssot_stats,
    ssyt_eps,
    ssyt_lower,
    ssyt_phi,
    ssyt_raise,
    stembridge_violations,
    strip_pair_multisets,
)
from sympcrystal.oscillating import SSOT, OscStrip, enumerate_ssot, ssot_from_text
from sympcrystal.rsk import enumerate_admissible, matrix, rsk_column
from sympcrystal.tableaux import (
    Tableau,
    enumerate_king,
    king_weight,
    partitions_in_box,
    partitions_of,
    rect_complement,
    tableaux_of_shape,
)


def running_example() -> SSOT:
    return ssot_from_text("(1 1b)(1 1 1b)(2 1 2b)(2 1)")


# ---------------------------------------------------------------------------
# multisets and pairing


def test_multiset_up_anchors():
    assert multiset_up(Counter({1: 1}), Counter({2: 1, 1: 1})) == Counter({2: 1})
    assert multiset_up(Counter({2: 1, 1: 1}), Counter({1: 1})) == Counter({2: 2})
    assert multiset_up(Counter(), Counter({1: 3})) == Counter()


@given(
    st.lists(st.integers(1, 5), max_size=6),
    st.lists(st.integers(1, 5), max_size=6),
)
def test_up_down_round_trip(a_items, b_items):
    a, b = Counter(a_items), Counter(b_items)
    c, d = multiset_up(a, b), multiset_up(b, a)
    assert multiset_down(c, d) == a
    assert multiset_down(d, c) == b


def test_pairing_anchors():
    left_c, left_d = pair_multisets(Counter([1, 1, -2]), Counter([2, 2, -2]))
    assert (left_c, left_d) == ([-2], [-2])
    # rows 2 and 3 of the locality example: the downward greedy scan would
    # leave {1,3} on the d side, but the bracket residue is {1,4}
    left_c, left_d = pair_multisets(Counter([1, 1, 2, 2, 4]), Counter([1, 3, 3, 3, 3, 4]))
    assert (left_c, left_d) == ([4], [1, 4])
    # a maximal matching that is not the bracket matching leaves a different
    # residue: pairing only (1,3) below is maximal yet leaves {2}/{2}
    assert pair_multisets(Counter([1, 2]), Counter([2, 3])) == ([], [])


def _cancellation_residue(c_items, d_items, rng):
    """Residue after cancelling adjacent (c, d) value pairs in random order."""
    word = sorted(
        [(v, "d") for v in d_items] + [(v, "c") for v in c_items],
        key=lambda t: (t[0], t[1] == "c"),  # ties: closes before opens
    )
    while True:
        spots = [
            k
            for k in range(len(word) - 1)
            if word[k][1] == "c" and word[k + 1][1] == "d"
        ]
        if not spots:
            break
        k = rng.choice(spots)
        del word[k : k + 2]
    return sorted(v for v, s in word if s == "c"), sorted(v for v, s in word if s == "d")


@given(
    st.lists(st.integers(-3, 3), max_size=6),
    st.lists(st.integers(-3, 3), max_size=6),
)
def test_pairing_order_independence(c_items, d_items):
    expected = pair_multisets(Counter(c_items), Counter(d_items))
    for seed in range(3):
        got = _cancellation_residue(c_items, d_items, random.Random(seed))
        assert (sorted(expected[0]), sorted(expected[1])) == got


def test_pairing_residue_is_separated():
    left_c, left_d = pair_multisets(Counter([1, 1, 2, 2, 4]), Counter([1, 3, 3, 3, 3, 4]))
    assert all(p >= q for p in left_c for q in left_d)


# ---------------------------------------------------------------------------
# type-A operators on semistandard tableaux


def test_ssyt_anchor():
    t = Tableau(((1, 1, 1, 2, 2), (2, 3), (3, 4)))
    assert ssyt_lower(t, 2) == Tableau(((1, 1, 1, 2, 3), (2, 3), (3, 4)))
    assert ssyt_raise(t, 2) is None
    assert (ssyt_eps(t, 2), ssyt_phi(t, 2)) == (0, 1)


def test_ssyt_single_box():
    assert ssyt_lower(Tableau(((1,),)), 1) == Tableau(((2,),))
    assert ssyt_raise(Tableau(((2,),)), 1) == Tableau(((1,),))
    assert ssyt_lower(Tableau(((2,),)), 1) is None


def test_ssyt_mutual_inverse_exhaustive():
    for lam in ((1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)):
        for t in tableaux_of_shape(lam, 3):
            for i in (1, 2):
                down = ssyt_lower(t, i)
                if down is not None:
                    assert ssyt_raise(down, i) == t
                up = ssyt_raise(t, i)
                if up is not None:
                    assert ssyt_lower(up, i) == t
                assert (ssyt_raise(t, i) is not None) == (ssyt_eps(t, i) > 0)
                assert (ssyt_lower(t, i) is not None) == (ssyt_phi(t, i) > 0)


# ---------------------------------------------------------------------------
# operators on oscillating tableaux


def test_junction_multisets_anchor():
    t = running_example()
    c, d = strip_pair_multisets(t, 2)
    assert sorted(c.elements()) == [-2, 1, 1]
    assert sorted(d.elements()) == [-2, 2, 2]
    # the junction multisets have the two strip sizes
    for i in (1, 2, 3):
        c, d = strip_pair_multisets(t, i)
        assert sum(c.values()) == t.strips[i - 1].size
        assert sum(d.values()) == t.strips[i].size


def test_ssot_junction_ops_anchor():
    t = running_example()
    up = ssot_raise(t, 2)
    assert up.strips[1].word == (1, 1, -1, -1)
    assert up.strips[2].word == (1, 1)
    down = ssot_lower(t, 2, 3)
    assert down.strips[1].word == (1, 1)
    assert down.strips[2].word == (2, 2, -2, -2)
    # strips away from the junction never move
    for s in (up, down):
        assert s.strips[0] == t.strips[0]
        assert s.strips[3] == t.strips[3]
    assert ssot_lower(up, 2, 3) == t
    assert ssot_raise(down, 2) == t
    assert ssot_stats(t, 2, 3) == (1, 1)


def test_ssot_index0_anchor():
    t = running_example()
    down = ssot_lower(t, 0, 3)
    assert down.strips[0].word == (1, 1, -1, -1)
    assert down.strips[1:] == t.strips[1:]
    down2 = ssot_lower(down, 0, 3)
    assert down2.strips[0].word == (1, 1, 1, -1, -1, -1)
    assert ssot_lower(down2, 0, 3) is None
    assert ssot_raise(down, 0) == t
    assert ssot_stats(t, 0, 3) == (1, 2)


def test_ssot_index0_requires_straight():
    skew = SSOT((OscStrip((1,), (1,)),))
    with pytest.raises(ValueError):
        ssot_raise(skew, 0)
    with pytest.raises(ValueError):
        ssot_stats(skew, 0, 2)


def test_ssot_empty_strips_stats():
    empty = SSOT((OscStrip((), ()), OscStrip((), ())))
    assert ssot_stats(empty, 0, 3) == (0, 3)
    assert ssot_raise(empty, 0) is None
    assert ssot_lower(empty, 0, 3).strips[0].word == (1, -1)


def test_ssot_index_out_of_range():
    with pytest.raises(ValueError):
        ssot_raise(running_example(), 4)


# ---------------------------------------------------------------------------
# operators on matrices


def test_matrix_index0():
    z = matrix([[0, 0], [0, 0]])
    assert matrix_raise(z, 0, 1) is None
    assert matrix_lower(z, 0, 1) == matrix([[2, 0], [0, 0]])
    assert matrix_lower(matrix([[2]]), 0, 1) is None
    assert matrix_lower(matrix([[2]]), 0, 2) == matrix([[4]])
    assert matrix_eps(matrix([[4]]), 0, 2) == 2
    assert matrix_phi(matrix([[4]]), 0, 2) == 0
    assert matrix_weight(matrix([[2, 0], [0, 0]]), 1) == (-1, 1)


def test_matrix_rejects_wide_input():
    with pytest.raises(ValueError):
        matrix_raise(matrix([[4]]), 0, 1)  # four columns after insertion
    with pytest.raises(ValueError):
        matrix_raise(matrix([[0, 0], [0, 0]]), 2, 1)


def test_matrix_raise_locality_example():
    m = matrix([[2, 2, 1, 1], [2, 2, 0, 1], [1, 0, 4, 1], [1, 1, 1, 2]])
    expected = matrix([[2, 2, 1, 1], [2, 2, 0, 2], [1, 0, 4, 0], [1, 2, 0, 2]])
    up = matrix_raise(m, 2, 5)
    assert up == expected
    assert matrix_lower(up, 2, 5) == m
    assert matrix_raise_surgery(m, 2) == expected
    # entries outside rows/columns 2,3 are untouched
    for p in (0, 3):
        for q in (0, 3):
            assert up[p][q] == m[p][q]


def test_locality_mask_anchor():
    m = matrix([[2, 2, 1, 1], [2, 2, 0, 1], [1, 0, 4, 1], [1, 1, 1, 2]])
    assert locality_mask(m, 2) == matrix(
        [[0, 0, 0, 0], [2, 1, 0, 0], [1, 0, 2, 0], [1, 1, 1, 0]]
    )
    assert locality_mask(matrix_raise(m, 2, 5), 2) == matrix(
        [[0, 0, 0, 0], [2, 1, 0, 0], [1, 0, 2, 0], [1, 2, 0, 0]]
    )


def test_matrix_two_routes_agree_exhaustive():
    for m_size in (1, 2, 3):
        for g in (1, 2):
            for mat in enumerate_admissible(m_size, g):
                for i in range(1, m_size):
                    assert matrix_raise(mat, i, g) == matrix_raise_surgery(mat, i)
                    assert matrix_lower(mat, i, g) == matrix_lower_surgery(mat, i)


def test_matrix_ops_preserve_admissible_and_symmetry():
    for mat in enumerate_admissible(3, 2):
        for i in range(3):
            for out in (matrix_raise(mat, i, 2), matrix_lower(mat, i, 2)):
                if out is not None:
                    assert out == tuple(zip(*out))
                    assert all(out[k][k] % 2 == 0 for k in range(3))


# ---------------------------------------------------------------------------
# axioms, equivariance, Stembridge


def _ssot_corpus(m, g):
    return [
        t
        for mu in partitions_in_box(m, g)
        for t in enumerate_ssot(rect_complement(mu, m, g), m, g)
    ]


@pytest.mark.parametrize("m,g", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)])
def test_axioms_exhaustive(m, g):
    assert axiom_violations(SsotCrystal(m, g), _ssot_corpus(m, g)) == []
    assert axiom_violations(MatrixCrystal(m, g), list(enumerate_admissible(m, g))) == []


@pytest.mark.parametrize("m,g", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)])
def test_phi_equivariance_exhaustive(m, g):
    cr_s, cr_m = SsotCrystal(m, g), MatrixCrystal(m, g)
    for t in enumerate_ssot((), m, g):
        mt = phi_map(t)
        for i in range(m):
            for side in ("e", "f"):
                image = getattr(cr_s, side)(t, i)
                image = None if image is None else phi_map(image)
                assert image == getattr(cr_m, side)(mt, i)
            assert ssot_stats(t, i, g) == (matrix_eps(mt, i, g), matrix_phi(mt, i, g))


@pytest.mark.parametrize("m,g", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_stembridge_exhaustive(m, g):
    assert stembridge_violations(SsotCrystal(m, g), _ssot_corpus(m, g)) == []
    assert (
        stembridge_violations(MatrixCrystal(m, g), list(enumerate_admissible(m, g)))
        == []
    )


@dataclass(frozen=True)
class _TypeA:
    """Plain tableau crystal, a known-good reference for the checker."""

    n: int

    @property
    def indices(self):
        return tuple(range(1, self.n))

    def e(self, x, i):
        return ssyt_raise(x, i)

    def f(self, x, i):
        return ssyt_lower(x, i)

    def eps(self, x, i):
        return ssyt_eps(x, i)

    def phi(self, x, i):
        return ssyt_phi(x, i)


def _classical_corpus(n, max_size):
    return [
        t
        for size in range(1, max_size + 1)
        for lam in partitions_of(size)
        if len(lam) <= n
        for t in tableaux_of_shape(lam, n)
    ]


def test_stembridge_on_classical_crystal():
    corpus = _classical_corpus(3, 6)
    assert stembridge_violations(_TypeA(3), corpus, indices=(1, 2)) == []


def test_stembridge_checker_detects_lies():
    class Liar(_TypeA):
        def eps(self, x, i):
            return ssyt_eps(x, i) + (5 if i == 2 else 0)

    corpus = _classical_corpus(3, 3)
    assert stembridge_violations(Liar(3), corpus, indices=(1, 2)) != []


def test_stembridge_rejects_index_zero():
    with pytest.raises(ValueError):
        stembridge_violations(SsotCrystal(2, 1), [], indices=(0, 1))


# ---------------------------------------------------------------------------
# graphs


def test_two_chain_graph():
    cr = SsotCrystal(1, 1)
    g = crystal_graph(cr, enumerate_ssot((), 1, 1))
    assert [str(v) for v in g.vertices] == ["()", "(1 1b)"]
    assert g.edges == ((0, 0, 1),)
    assert g.weights == ((1,), (-1,))
    assert [str(v) for v in g.highest_weight_vertices()] == ["()"]
    assert decompose(g) == Counter({(1,): 1})
    assert graph_to_adjacency(g) == "() -0-> (1 1b)"
    dot = graph_to_dot(g)
    assert 'v0 [label="()"];' in dot and 'v0 -> v1 [label="0"];' in dot


def test_graph_is_deterministic_and_closed():
    cr = SsotCrystal(2, 2)
    ambient = list(enumerate_ssot((1,), 2, 2))
    g1 = crystal_graph(cr, ambient)
    g2 = crystal_graph(cr, list(reversed(ambient)))
    assert g1.vertices == g2.vertices and g1.edges == g2.edges
    assert set(g1.vertices) == set(ambient)


def test_graph_from_single_seed_recovers_component():
    cr = SsotCrystal(2, 2)
    ambient = set(enumerate_ssot((1,), 2, 2))
    seed = next(iter(sorted(ambient, key=str)))
    g = crystal_graph(cr, [seed])
    assert set(g.vertices) == ambient
    assert len(g.components()) == 1


def test_highest_weight_vertex_structure():
    # outside (1) in the 2x2 box corresponds to the two-row shape (2,1)
    cr = SsotCrystal(2, 2)
    g = crystal_graph(cr, enumerate_ssot((1,), 2, 2))
    hws = g.highest_weight_vertices()
    assert len(hws) == 1
    hw = hws[0]
    assert hw.strips[0].word == (1,) and hw.strips[1].word == ()
    assert cr.weight(hw) == (1, 2)
    assert decompose(g) == Counter({(1, 2): 1})


def test_king_transport_graph():
    kings = enumerate_king((1, 1), 2)
    assert len(kings) == 5
    cr = KingCrystal(2, 1)
    g = crystal_graph(cr, kings)
    assert len(g.vertices) == 5
    assert len(g.components()) == 1
    hws = g.highest_weight_vertices()
    assert len(hws) == 1
    assert king_weight(hws[0], 2) == (1, 1)
    # vertex-for-vertex the same graph as the oscillating model
    so = crystal_graph(SsotCrystal(2, 1), [psi(k, 2, 1) for k in kings])
    carried = {psi(v, 2, 1) for v in g.vertices}
    assert carried == set(so.vertices)
    king_edges = {
        (psi(g.vertices[a], 2, 1), i, psi(g.vertices[b], 2, 1))
        for a, i, b in g.edges
    }
    osc_edges = {
        (so.vertices[a], i, so.vertices[b]) for a, i, b in so.edges
    }
    assert king_edges == osc_edges


def test_matrix_graph_closure():
    mats = list(enumerate_admissible(2, 1))
    g = crystal_graph(MatrixCrystal(2, 1), mats)
    assert set(g.vertices) == set(mats)
    assert len(g.components()) == 1
    assert decompose(g) == Counter({(1, 1): 1})


def test_graph_detects_broken_operators():
    class Broken(_TypeA):
        def f(self, x, i):
            return x  # not invertible by e

    with pytest.raises(ValueError):
        crystal_graph(Broken(2), [Tableau(((1,),))])


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
