import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bihochster.complex import (boundary_of_simplex, face, from_facets, full_subcomplex,
                                ghost_vertices, simplex)
from bihochster.hochster import (BigradedTable, CochainComplexCH, SubcomplexHomology,
                                 ch_differential, d_squared_holds, double_homology, epsilon,
                                 hochster_table, subsets_of_size)
from bihochster.homology import boundary_matrix, reduced_homology
from bihochster.linalg import AbelianGroup, int_matrix

from conftest import complexes
from oracles import hochster_by_brute_force, rational_hh_ranks

Z = AbelianGroup(1)


def test_epsilon():
    assert epsilon(4, face([1, 2, 3])) == -1
    assert epsilon(1, face([2, 3, 4])) == 1
    assert epsilon(3, face([1, 4])) == -1
    assert epsilon(2, 0) == 1


def test_subsets_of_size():
    assert subsets_of_size(3, 2) == [3, 5, 6]
    assert subsets_of_size(3, 0) == [0]
    assert len(subsets_of_size(6, 3)) == 20


def test_hochster_glued_triangles(glued_triangles):
    table = hochster_table(glued_triangles)
    assert table.entries == {(0, 0): Z, (-1, 4): Z, (-1, 6): AbelianGroup(2),
                             (-2, 8): AbelianGroup(2)}


def test_hochster_simplex():
    for m in range(1, 5):
        assert hochster_table(simplex(m)).entries == {(0, 0): Z}


def test_hochster_triangle_boundary():
    table = hochster_table(boundary_of_simplex(3))
    assert table.entries == {(0, 0): Z, (-1, 6): Z}
    assert table.entries == hochster_by_brute_force(boundary_of_simplex(3))


@settings(max_examples=60, deadline=None)
@given(complexes(max_m=5))
def test_hochster_matches_brute_force(K):
    assert hochster_table(K).entries == hochster_by_brute_force(K)


def test_bigraded_table_rejects_bad_bidegree():
    t = BigradedTable("H", 3)
    with pytest.raises(ValueError):
        t.add((-1, 3), Z)
    for bad in ((1, 2), (-2, 2), (0, 8)):
        with pytest.raises(ValueError):
            t.add(bad, Z)
    t.add((0, 0), AbelianGroup())
    assert t.is_zero()


def test_double_homology_glued_triangles(glued_triangles):
    assert double_homology(glued_triangles).entries == {(0, 0): Z, (-1, 4): Z}


def test_double_homology_small_cases(rp2):
    assert double_homology(simplex(4)).entries == {(0, 0): Z}
    assert double_homology(boundary_of_simplex(3)).entries == {(0, 0): Z, (-1, 6): Z}
    assert double_homology(from_facets(4, [{1, 2, 3}])).is_zero()
    assert double_homology(rp2).entries == {(0, 0): Z, (-1, 6): Z}


def _triangle_class(H, T):
    """Generator coordinates of the cycle d[T] in H = H_1 of some complex."""
    full = simplex(4)
    edges = [f for f in full.faces if bin(f).count("1") == 2]
    tris = [f for f in full.faces if bin(f).count("1") == 3]
    col = boundary_matrix(full, 2)[:, tris.index(T)]
    cycle = int_matrix([[int(col[edges.index(e)])] for e in H.chains.faces(1)])
    return H[1].coordinates(cycle)[:, 0]


def test_glued_triangles_differential_in_triangle_basis(glued_triangles):
    # rewrite D: CH_2^3 -> CH_2^4 in the bases given by the boundary cycles
    # of the triangles {1,2,3} and {2,3,4}; expected diag(-1, 1)
    triangles = [face([1, 2, 3]), face([2, 3, 4])]
    ch = CochainComplexCH(glued_triangles, 2)
    D = ch.differential(3)
    assert [J for J, _ in ch.blocks[3]] == triangles

    # each generator of H_1(K_T) is c_T * d[T] with c_T = +-1
    signs = []
    for T in triangles:
        c = _triangle_class(reduced_homology(full_subcomplex(glued_triangles, T)), T)
        assert c.shape == (1,) and abs(int(c[0])) == 1
        signs.append(int(c[0]))

    HK = reduced_homology(glued_triangles)
    P = np.stack([_triangle_class(HK, T) for T in triangles], axis=1)
    # D_triangle = P^-1 D diag(c), i.e. D diag(c) = P D_triangle
    lhs = D @ np.diag(np.array(signs, dtype=object))
    assert lhs.tolist() == (P @ np.array([[-1, 0], [0, 1]], dtype=object)).tolist()


def test_ghost_differential_sums_ghost_generators():
    K = from_facets(5, [{1, 2}, {2, 3}])
    G = ghost_vertices(K)
    assert G == (4, 5)
    ch = CochainComplexCH(K, 0)
    assert [J for J, _ in ch.blocks[1]] == [face([4]), face([5])]
    D = ch.differential(0)
    assert D.tolist() == [[1], [1]]
    assert double_homology(K).is_zero()


def test_top_differential_has_no_rows(glued_triangles):
    for n in range(5):
        D = ch_differential(glued_triangles, n, 4)
        assert D.shape[0] == 0


def test_ch_differential_range(glued_triangles):
    with pytest.raises(ValueError):
        ch_differential(glued_triangles, 1, 5)


@settings(max_examples=80, deadline=None)
@given(complexes(max_m=5))
def test_d_squared(K):
    assert d_squared_holds(K)


@settings(max_examples=60, deadline=None)
@given(complexes(max_m=5))
def test_euler_relation(K):
    cache = SubcomplexHomology(K)
    table = double_homology(K, cache)
    for n in range(K.m + 1):
        ch = CochainComplexCH(K, n, cache)
        lhs = sum((-1) ** l * table[(n - l, 2 * l)].free_rank for l in range(K.m + 1))
        rhs = sum((-1) ** l * ch.group(l).structure.free_rank for l in range(K.m + 1))
        assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(complexes(max_m=5))
def test_rational_ranks_match_oracle(K):
    table = double_homology(K)
    assert all(not g.torsion for g in table.entries.values())
    assert {b: g.free_rank for b, g in table.entries.items()} == rational_hh_ranks(K)


@settings(max_examples=40, deadline=None)
@given(complexes(max_m=5))
def test_rational_cohomology_ranks(K):
    cache = SubcomplexHomology(K)
    table = double_homology(K, cache)
    for n in range(K.m + 1):
        ranks = CochainComplexCH(K, n, cache).rational_cohomology_ranks()
        assert ranks == [table[(n - l, 2 * l)].free_rank for l in range(K.m + 1)]


@settings(max_examples=100, deadline=None)
@given(complexes(max_m=5))
def test_bottom_row_dichotomy(K):
    table = double_homology(K)
    if ghost_vertices(K):
        assert table[(0, 0)].is_trivial
    else:
        assert table[(0, 0)] == Z
    assert all(table[(-k, 0)].is_trivial for k in range(1, K.m + 1))


def test_parallel_cache_matches_serial(rp2):
    serial = double_homology(rp2)
    parallel = double_homology(rp2, jobs=2)
    assert serial == parallel


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5))
def test_ghost_vertex_kills_everything(m):
    K = from_facets(m + 1, [face(range(1, m + 1))])
    assert double_homology(K).is_zero()
