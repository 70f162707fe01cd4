from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lattice_crystals.errors import IntersectingFamily
from lattice_crystals.exactpoly import QT_Q, LaurentPoly, Q
from lattice_crystals.lgvdet import (
    INTEGERS,
    LAURENT,
    PathFamily,
    WeightedDAG,
    area_weight,
    catalan_graph,
    common_ring,
    det_cofactor,
    det_division_free,
    grid_graph,
    hankel,
    is_hankel,
    lgv_enumerate,
    lgv_signed_sum,
    path_gf,
    path_matrix,
    permutation_sign,
    ring_of,
)
from lattice_crystals.paths import carlitz_riordan, catalan_number

small_ints = st.integers(min_value=-5, max_value=5)


@st.composite
def square_matrices(draw, elements=small_ints, max_size=4):
    n = draw(st.integers(min_value=0, max_value=max_size))
    return [[draw(elements) for _ in range(n)] for _ in range(n)]


laurent_entries = st.dictionaries(st.integers(-2, 2), small_ints, max_size=3).map(
    LaurentPoly
)


@st.composite
def dags(draw, size=7):
    pairs = [(u, v) for u in range(size) for v in range(u + 1, size)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=14))
    return [(u, v, draw(st.integers(min_value=1, max_value=3))) for u, v in chosen]


class TestRings:
    def test_ring_of(self):
        assert ring_of(3) is INTEGERS
        assert ring_of(Q) is LAURENT
        with pytest.raises(TypeError):
            ring_of("q")

    def test_common_ring(self):
        assert common_ring([1, Q, 2]) is LAURENT
        assert common_ring([]) is INTEGERS
        with pytest.raises(TypeError):
            common_ring([Q, QT_Q])


class TestDeterminants:
    def test_small(self):
        assert det_division_free([[2, 5], [5, 14]]) == 3
        assert det_division_free([[7]]) == 7
        assert det_division_free([]) == 1
        assert det_division_free([[1, 2], [2, 4]]) == 0

    def test_not_square(self):
        with pytest.raises(ValueError):
            det_division_free([[1, 2]])

    @given(square_matrices())
    def test_berkowitz_agrees_with_cofactor(self, matrix):
        assert det_division_free(matrix) == det_cofactor(matrix)

    @given(square_matrices(laurent_entries, max_size=3))
    def test_berkowitz_over_laurent_polynomials(self, matrix):
        assert det_division_free(matrix, LAURENT) == det_cofactor(matrix, LAURENT)

    def test_polynomial_entries(self):
        matrix = [[1, Q], [Q, Q**3]]
        assert det_division_free(matrix) == Q**3 - Q**2

    def test_hankel(self):
        matrix = hankel(catalan_number, 3)
        assert matrix == [[1, 1, 2], [1, 2, 5], [2, 5, 14]]
        assert is_hankel(matrix)
        assert not is_hankel([[1, 2], [3, 4]])
        assert hankel(catalan_number, 0) == []

    @pytest.mark.parametrize("size", range(1, 7))
    @pytest.mark.parametrize("offset", [0, 1])
    def test_catalan_hankels_are_one(self, size, offset):
        assert det_division_free(hankel(catalan_number, size, offset)) == 1


class TestGraphs:
    def test_cycle(self):
        with pytest.raises(ValueError):
            WeightedDAG([("a", "b", 1), ("b", "c", 1), ("c", "a", 1)])

    def test_unknown_vertex(self):
        graph = WeightedDAG([("a", "b", 2)])
        assert path_gf(graph, "a", "b") == 2
        assert path_gf(graph, "b", "a") == 0
        with pytest.raises(KeyError):
            path_gf(graph, "a", "z")

    def test_grid_counts(self):
        assert path_gf(grid_graph(2, 3), (0, 0), (2, 3)) == comb(5, 2)
        assert path_gf(catalan_graph(2, 2), (0, 0), (2, 2)) == 2
        assert path_gf(catalan_graph(5, 5), (0, 0), (5, 5)) == 42

    @pytest.mark.parametrize("n", range(0, 6))
    def test_area_weight(self, n):
        graph = catalan_graph(n, n, area_weight, LAURENT)
        assert path_gf(graph, (0, 0), (n, n)) == carlitz_riordan(n)

    def test_sessions_memoize(self):
        session = catalan_graph(4, 4).session()
        first = session.matrix([(0, 0), (1, 1)], [(3, 3), (4, 4)])
        assert first == session.matrix([(0, 0), (1, 1)], [(3, 3), (4, 4)])
        assert first[0][1] == 14


class TestLindstromGesselViennot:
    def test_permutation_sign(self):
        assert permutation_sign((0, 1, 2)) == 1
        assert permutation_sign((1, 0)) == -1
        assert permutation_sign((1, 2, 0)) == 1
        assert permutation_sign((2, 1, 0)) == -1

    def test_planar_grid(self):
        graph = grid_graph(3, 3)
        sources, sinks = [(0, 1), (1, 0)], [(2, 3), (3, 2)]
        families = lgv_enumerate(graph, sources, sinks)
        assert all(f.is_identity and f.is_non_intersecting() for f in families)
        expected = det_division_free(path_matrix(graph, sources, sinks))
        assert lgv_signed_sum(families) == len(families) == expected

    def test_weighted_grid(self):
        def weight(step, x, y):
            return Q**x if step == "N" else LaurentPoly(1)

        graph = grid_graph(3, 3, weight, ring=LAURENT)
        sources, sinks = [(0, 0), (1, 0)], [(2, 3), (3, 3)]
        families = lgv_enumerate(graph, sources, sinks)
        expected = det_division_free(path_matrix(graph, sources, sinks))
        assert lgv_signed_sum(families, LAURENT) == expected

    def test_crossing_family(self):
        graph = WeightedDAG([("a", "d", 1), ("b", "c", 1)])
        families = lgv_enumerate(graph, ["a", "b"], ["c", "d"])
        assert [f.permutation for f in families] == [(1, 0)]
        assert lgv_signed_sum(families) == -1
        with pytest.raises(IntersectingFamily):
            lgv_enumerate(graph, ["a", "b"], ["c", "d"], identity_only=True)

    def test_mismatched_endpoints(self):
        with pytest.raises(ValueError):
            lgv_enumerate(grid_graph(1, 1), [(0, 0)], [])

    @given(dags())
    def test_signed_sum_is_the_determinant(self, edges):
        graph = WeightedDAG(edges, vertices=range(7))
        sources, sinks = [0, 1, 2], [4, 5, 6]
        families = lgv_enumerate(graph, sources, sinks)
        assert all(f.is_non_intersecting() for f in families)
        expected = det_division_free(path_matrix(graph, sources, sinks))
        assert lgv_signed_sum(families) == expected

    def test_words(self):
        family = PathFamily((((0, 0), (1, 0), (1, 1)),), (0,), 1, 1)
        assert family.words() == ["EN"]
        crossing = PathFamily((((0, 0), (1, 0)), ((1, 0), (1, 1))), (0, 1), 1, 1)
        assert not crossing.is_non_intersecting()
