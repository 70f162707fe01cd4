import pytest

from lattice_crystals.crystal import CartanSpec, highest_weight_crystal
from lattice_crystals.errors import InvalidWeight, InvalidWord
from lattice_crystals.kingtab import (
    KingLetter,
    KingTableau,
    conjugate_partition,
    enumerate_king,
    king_character,
    nilp_families,
    nilp_to_king,
    partition_from_fundamental,
    xi,
    xi_inverse,
    xi_prime,
    xi_prime_inverse,
)
from lattice_crystals.paths import (
    enumerate_conjugate_partial_dyck,
    enumerate_partial_dyck,
)


def king_columns(height, n):
    return sorted(t.columns[0] for t in enumerate_king((1,) * height, n))


class TestKingTableau:
    def test_letters(self):
        assert KingLetter.from_signed(-2) == KingLetter(2, True)
        assert KingLetter(2, True).signed == -2
        assert str(KingLetter(3, True)) == "3bar"
        assert KingLetter(1, True).key < KingLetter(2).key
        with pytest.raises(ValueError):
            KingLetter.from_signed(0)

    def test_shape_and_columns(self):
        tableau = KingTableau.from_signed_rows([[-1, 2, 2], [-2, -2, 4], [3, -4]])
        assert tableau.shape == (3, 3, 2)
        assert tableau.columns == [(-1, -2, 3), (2, -2, -4), (2, 4)]
        assert KingTableau.from_columns(tableau.columns) == tableau
        assert tableau.is_valid(4)
        assert not tableau.is_valid(3)

    def test_row_lower_bound(self):
        assert not KingTableau.from_signed_rows([[1], [1]]).is_valid(2)
        assert not KingTableau.from_signed_rows([[1], [-1]]).is_valid(2)
        assert KingTableau.from_signed_rows([[-1], [2]]).is_valid(2)

    def test_weight(self):
        tableau = KingTableau.from_signed_rows([[1, -2], [2]])
        assert tableau.weight(2) == (2, 0)


class TestEnumeration:
    def test_single_box(self):
        assert len(enumerate_king((1,), 2)) == 4

    def test_fundamental_dimension(self):
        assert len(enumerate_king(partition_from_fundamental((0, 0, 1)), 3)) == 14

    def test_invalid_shape(self):
        with pytest.raises(InvalidWeight):
            enumerate_king((1, 2), 3)
        with pytest.raises(InvalidWeight):
            enumerate_king((1, 1, 1), 2)

    def test_partitions(self):
        assert partition_from_fundamental((0, 1, 2)) == (3, 3, 2)
        assert conjugate_partition((3, 3, 2)) == (3, 3, 2)
        assert conjugate_partition((2, 1)) == (2, 1)
        assert conjugate_partition((3,)) == (1, 1, 1)

    @pytest.mark.parametrize("coefficients", [(1, 0), (0, 1), (0, 2), (1, 1)])
    def test_character_matches_crystal(self, coefficients):
        cartan = CartanSpec("C", 2)
        crystal = highest_weight_crystal(
            cartan, cartan.weight_from_fundamental(coefficients)
        )
        shape = partition_from_fundamental(coefficients)
        assert king_character(shape, 2) == crystal.character()


class TestColumnBijections:
    def test_examples(self):
        assert xi("EENENNEENN") == (-1, -2, 3, -4)
        assert xi_prime("EENENNEENN") == (-1, 2, -3, -4)
        assert xi_inverse((-1, -2, 3, -4), 4) == "EENENNEEN"

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_xi_is_a_bijection(self, n):
        for i in range(1, n + 1):
            words = enumerate_partial_dyck(2 * n - i + 1, i)
            columns = [xi(w) for w in words]
            assert sorted(columns) == king_columns(i, n)
            assert [xi_inverse(c, n) for c in columns] == words

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_xi_prime_is_a_bijection(self, n):
        for i in range(1, n + 1):
            words = enumerate_conjugate_partial_dyck(i, 2 * n - i + 1)
            columns = [xi_prime(w) for w in words]
            assert sorted(columns) == king_columns(i, n)
            assert [xi_prime_inverse(c, n) for c in columns] == words

    def test_invalid_words(self):
        with pytest.raises(InvalidWord):
            xi("NE")
        with pytest.raises(InvalidWord):
            xi("EE")


class TestNonIntersectingFamilies:
    def test_two_omega_two(self):
        families = nilp_families((2, 2), 2)
        tableaux = [nilp_to_king(f, (2, 2), 2) for f in families]
        assert len(set(tableaux)) == len(tableaux)
        assert set(tableaux) == set(enumerate_king((2, 2), 2))

    @pytest.mark.slow
    def test_full_rectangle(self):
        families = nilp_families((3, 3, 3), 3)
        tableaux = {nilp_to_king(f, (3, 3, 3), 3) for f in families}
        assert len(tableaux) == len(families)
        assert tableaux == set(enumerate_king((3, 3, 3), 3))
        expected = KingTableau.from_signed_rows([[-1, -1, 2], [2, -2, -2], [3, 3, -3]])
        assert expected in tableaux
