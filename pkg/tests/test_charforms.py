from collections import Counter

import pytest

from lattice_crystals.charforms import (
    DominantWeight,
    branching_nps_B_to_D,
    cat_prime_q,
    catalan_hankel_product,
    catalan_ratio_holds,
    character_as_group_algebra,
    character_weyl_via_crystal,
    dim_column_D,
    dim_rectangle_C,
    dim_spin_rectangle_B,
    dim_weyl,
    jacobi_trudi,
    jacobi_trudi_matrix,
    jacobi_trudi_row_form,
    nps,
    nps_from_character,
    ps_via_crystal,
    ps_weyl,
    rectangle_hankel_C,
    spin_power_hankel_B,
    spin_power_multiplicity_B,
    spin_power_oracle_B,
    spin_rect_hankel,
    spin_rect_negative_example,
    wedge_multiplicity_via_dimension,
    wedge_power_hankel_C,
    wedge_power_multiplicity_C,
    wedge_power_oracle_C,
)
from lattice_crystals.crystal import CartanSpec
from lattice_crystals.errors import InvalidFamily, InvalidWeight
from lattice_crystals.exactpoly import LaurentPoly, q_binomial, q_pochhammer
from lattice_crystals.lgvdet import det_division_free

from .helpers import read_golden


def fundamental(family, rank, *coefficients):
    return DominantWeight.from_fundamental(family, rank, coefficients)


def doubled(family, rank, weight):
    return DominantWeight.from_weight(CartanSpec(family, rank), weight)


def negative_coefficient(poly: LaurentPoly) -> bool:
    return any(c < 0 for _, c in poly.terms())


class TestDominantWeight:
    def test_partition_views(self):
        weight = DominantWeight.from_partition("C", 3, (2, 2, 1))
        assert weight.coefficients == (0, 1, 1)
        assert weight.partition == (2, 2, 1)
        assert weight.conjugate == (3, 2)
        assert weight.fundamental == (0, 1, 1)
        assert "w2" in str(weight) and "w3" in str(weight)

    def test_not_dominant(self):
        with pytest.raises(InvalidWeight):
            doubled("C", 2, (0, 2))
        with pytest.raises(InvalidWeight):
            DominantWeight.from_partition("C", 2, (1, 1, 1))

    def test_spin_weight_has_no_partition(self):
        with pytest.raises(InvalidWeight):
            fundamental("B", 2, 0, 1).partition


class TestDimensions:
    def test_examples(self):
        assert dim_weyl(fundamental("C", 2, 0, 2)) == 14
        assert dim_weyl(fundamental("D", 4, 0, 0, 2, 2)) == 840
        assert dim_weyl(fundamental("D", 4, 0, 0, 1, 1)) == 56
        assert dim_weyl(fundamental("A", 2, 1, 1)) == 8
        assert dim_weyl(fundamental("B", 3, 0, 0, 1)) == 8

    def test_not_a_weight(self):
        with pytest.raises(TypeError):
            dim_weyl((1, 0))

    @pytest.mark.parametrize("n", range(2, 6))
    def test_columns_of_type_d(self, n):
        cartan = CartanSpec("D", n)
        for s in range(n + 1):
            assert dim_weyl(doubled("D", n, cartan.tfw(s))) == dim_column_D(s, n)

    @pytest.mark.parametrize("n", range(1, 4))
    @pytest.mark.parametrize("r", range(1, 4))
    def test_rectangles(self, r, n):
        spin = fundamental("B", n, *([0] * (n - 1) + [r]))
        assert dim_weyl(spin) == dim_spin_rectangle_B(r, n)
        rectangle = fundamental("C", n, *([0] * (n - 1) + [r]))
        expected = dim_weyl(rectangle)
        assert dim_rectangle_C(r, n) == expected
        assert rectangle_hankel_C(r, n) == expected
        assert catalan_hankel_product(r, n) == expected

    @pytest.mark.parametrize("n", range(1, 4))
    @pytest.mark.parametrize("r", range(1, 4))
    def test_spin_rectangle_hankels(self, r, n):
        weight = fundamental("B", n, *([0] * (n - 1) + [2 * r]))
        assert spin_rect_hankel(r, n) == dim_weyl(weight)

    def test_spin_rectangle_examples(self):
        assert spin_rect_hankel(1, 1) == 3
        assert spin_rect_negative_example() == 252


class TestPrincipalSpecializations:
    def test_type_c_column(self):
        poly = nps(fundamental("C", 4, 0, 1, 0, 0))
        assert str(poly) == read_golden("cat_prime_7_2")
        assert poly == cat_prime_q(7, 2).shift(7)

    def test_type_d_golden(self):
        poly = nps(doubled("D", 4, CartanSpec("D", 4).tfw(3)))
        assert str(poly) == read_golden("nps_D4_tfw3")

    def test_type_d_adjoint_golden(self):
        poly = nps(doubled("D", 4, CartanSpec("D", 4).tfw(2)))
        assert str(poly) == read_golden("nps_D4_tfw2")

    @pytest.mark.parametrize("n", range(1, 6))
    def test_spin_type_b(self, n):
        weight = fundamental("B", n, *([0] * (n - 1) + [1]))
        assert nps(weight) == q_pochhammer(n, negative=True)
        with pytest.raises(ValueError):
            ps_weyl(weight)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_binomial_columns_type_b(self, n):
        cartan = CartanSpec("B", n)
        for i in range(n + 1):
            weight = doubled("B", n, cartan.tfw(i))
            assert nps(weight) == q_binomial(2 * n + 1, i)

    @pytest.mark.parametrize(
        "family, rank, coefficients",
        [
            ("A", 2, (1, 1)),
            ("B", 2, (1, 0)),
            ("C", 2, (1, 1)),
            ("C", 3, (0, 1, 0)),
            ("D", 3, (1, 0, 0)),
            ("D", 4, (0, 1, 0, 0)),
        ],
    )
    def test_crystal_agrees_with_weyl(self, family, rank, coefficients):
        weight = fundamental(family, rank, *coefficients)
        assert ps_via_crystal(weight) == ps_weyl(weight)
        assert ps_weyl(weight).evaluate(1) == dim_weyl(weight)

    def test_spin_character(self):
        weight = fundamental("B", 3, 0, 0, 1)
        character = character_weyl_via_crystal(weight)
        assert nps_from_character(weight.cartan, character) == nps(weight)
        with pytest.raises(ValueError):
            character_as_group_algebra(character)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_catalan_ratio(self, n):
        for i in range(1, n):
            assert catalan_ratio_holds(n, i)


class TestJacobiTrudi:
    @pytest.mark.parametrize(
        "rank, coefficients",
        [(2, (1, 0)), (2, (0, 1)), (2, (0, 2)), (2, (1, 1)), (3, (1, 0, 1))],
    )
    def test_dimension_and_specialization(self, rank, coefficients):
        weight = fundamental("C", rank, *coefficients)
        assert jacobi_trudi(weight) == dim_weyl(weight)
        assert jacobi_trudi(weight, "q") == ps_weyl(weight)
        assert jacobi_trudi_row_form(weight.partition, rank) == dim_weyl(weight)

    @pytest.mark.parametrize("coefficients", [(1, 0), (0, 1), (0, 2), (2, 0)])
    def test_character(self, coefficients):
        weight = fundamental("C", 2, *coefficients)
        expected = character_as_group_algebra(character_weyl_via_crystal(weight))
        assert jacobi_trudi(weight, "character") == expected

    def test_trivial_weight(self):
        assert jacobi_trudi(fundamental("C", 2, 0, 0)) == 1

    @pytest.mark.parametrize("ell, n", [(2, 1), (2, 2), (3, 2), (2, 3)])
    def test_extended_paths_for_rectangles(self, ell, n):
        shape = (ell,) * n
        plain = det_division_free(jacobi_trudi_matrix(shape, n))
        extended = det_division_free(jacobi_trudi_matrix(shape, n, extend=True))
        assert plain == extended == dim_rectangle_C(ell, n)

    def test_only_type_c(self):
        with pytest.raises(InvalidFamily):
            jacobi_trudi(fundamental("B", 2, 1, 0))
        with pytest.raises(ValueError):
            jacobi_trudi_matrix((1,), 2, mode="weights")


class TestMultiplicities:
    @pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (2, 2), (3, 1)])
    def test_spin_powers(self, n, m):
        cartan = CartanSpec("B", n)
        oracle = spin_power_oracle_B(n, m)
        assert spin_power_hankel_B(n, m) == oracle[cartan.zero]
        for weight, count in oracle.items():
            dominant = DominantWeight.from_weight(cartan, weight)
            assert spin_power_multiplicity_B(dominant, m) == count

    @pytest.mark.parametrize("n, m", [(1, 2), (2, 1), (2, 2)])
    def test_wedge_powers(self, n, m):
        cartan = CartanSpec("C", n)
        oracle = wedge_power_oracle_C(n, m)
        assert wedge_power_hankel_C(n, m) == oracle[cartan.zero]
        for weight, count in oracle.items():
            dominant = DominantWeight.from_weight(cartan, weight)
            assert wedge_power_multiplicity_C(dominant, m) == count
            assert wedge_multiplicity_via_dimension(dominant, m) == count

    def test_wedge_column(self):
        assert wedge_power_oracle_C(2, 1) == Counter(
            {(0, 0): 3, (2, 0): 2, (2, 2): 1}
        )


class TestBranching:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_nps_b_to_d(self, n):
        for s in range(n + 1):
            check = branching_nps_B_to_D(s, n)
            assert check.holds, (s, n, str(check.lhs), str(check.rhs))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            branching_nps_B_to_D(3, 2)

    @pytest.mark.parametrize("k", [2, 3])
    def test_binomial_is_not_the_type_d_column(self, k):
        poly = nps(doubled("D", 4, CartanSpec("D", 4).tfw(k)))
        assert poly != q_binomial(8, k)
        assert poly.evaluate(1) == q_binomial(8, k).evaluate(1)


class TestNoPositiveDeterminant:
    def test_differences_have_negative_coefficients(self):
        d_plus = q_binomial(5, 2) * q_binomial(9, 4)
        d_minus = q_binomial(7, 3) ** 2
        assert str(d_plus) == read_golden("d_plus")
        assert str(d_minus) == read_golden("d_minus")
        for k in range(-30, 31):
            assert negative_coefficient(d_plus - d_minus.shift(k))
