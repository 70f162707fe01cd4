import pytest

from lattice_crystals.crystal import (
    CartanSpec,
    add_weights,
    apply,
    element,
    highest_weight_crystal,
)
from lattice_crystals.errors import InvalidWeight
from lattice_crystals.paths import motzkin_triangle, riordan_triangle
from lattice_crystals.rigid import (
    ASP,
    GRAY,
    WHITE,
    ColoredInt,
    RigidTableau,
    StrictPartition,
    almost_spin_subcrystal,
    asp_apply,
    asp_orbit,
    asp_to_spin,
    asps,
    closure_violations,
    dual_conjugate,
    fundamental_subcrystal,
    highest_weight_rigid,
    is_almost_even,
    motzkin_standard_set,
    motzkin_subcrystal,
    rigid_crystal,
    rigid_subcrystal,
    riordan_sets,
    sp_apply,
    spin_rigid_subcrystal,
    spin_to_asp,
    ssrt_apply,
    ssrt_shape,
    staircase,
    staircase_between,
    strict_partitions,
    virtualization_filter,
)


def weyl_size(family, n, weight):
    return len(highest_weight_crystal(CartanSpec(family, n), weight))


class TestStrictPartitions:
    def test_invalid(self):
        with pytest.raises(ValueError):
            StrictPartition((2, 2))
        with pytest.raises(ValueError):
            StrictPartition((1, 2))
        with pytest.raises(ValueError):
            StrictPartition((1, 0))

    def test_staircases(self):
        assert staircase(3) == (3, 2, 1)
        assert staircase(0) == ()
        assert staircase_between(5, 3) == (5, 4, 3)
        assert staircase_between(2, 3) == ()
        assert len(strict_partitions(4)) == 16

    def test_spin_round_trip(self):
        for nu in strict_partitions(3):
            assert StrictPartition.from_spin(nu.to_spin(3)) == nu
        assert str(StrictPartition((2, 1)).to_spin(3)) == "+--"
        with pytest.raises(InvalidWeight):
            StrictPartition((4,)).to_spin(3)

    def test_operators(self):
        nu = StrictPartition()
        nu = sp_apply("f", 3, nu, 3)
        assert nu == (1,)
        nu = sp_apply("f", 2, nu, 3)
        assert nu == (2,)
        nu = sp_apply("f", 1, nu, 3)
        assert nu == (3,)
        assert sp_apply("f", 1, nu, 3) is None
        assert sp_apply("e", 3, StrictPartition((1,)), 3) == ()
        assert sp_apply("f", 3, StrictPartition((1,)), 3) is None
        with pytest.raises(ValueError):
            sp_apply("f", 4, nu, 3)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_operators_agree_with_spin_crystal(self, n):
        for nu in strict_partitions(n):
            tableau = RigidTableau((nu,))
            for i in range(1, n + 1):
                for op in "ef":
                    new = ssrt_apply(op, i, tableau, n)
                    expected = sp_apply(op, i, nu, n)
                    assert (new is None) == (expected is None)
                    if new is not None:
                        assert new.rows == (expected,)


class TestRigidTableaux:
    def test_shape(self):
        tableau = RigidTableau.of([[5, 4, 3], [5, 4], [5, 4, 3, 2], [5, 4, 3, 2, 1]])
        assert ssrt_shape(tableau) == ((6, 5, 5, 5), (3, 3, 1))
        assert tableau.inner_shape == (3, 3, 1)
        assert RigidTableau.of([[2, 1], [1]]).shape == ((2, 1), ())

    def test_standard(self):
        assert RigidTableau.of([[3, 1], [2]]).is_standard(3)
        assert not RigidTableau.of([[3, 1], [1]]).is_standard(3)

    def test_dual_conjugate(self):
        assert dual_conjugate(RigidTableau.of([[3, 2], [3, 1]]), 3) == [[1, 1], [2, 3]]
        with pytest.raises(ValueError):
            dual_conjugate(RigidTableau.of([[1], [2]]), 3)

    @pytest.mark.parametrize("k, size", [(0, 1), (1, 7), (2, 21), (3, 35)])
    def test_fundamental_subcrystals(self, k, size):
        crystal = fundamental_subcrystal(3, k)
        assert len(crystal) == size
        assert closure_violations(crystal) == []

    def test_rigid_subcrystal_example(self):
        assert len(rigid_subcrystal(3, 2, (1,))) == 21
        with pytest.raises(ValueError):
            rigid_subcrystal(3, 2, (1, 1))

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_almost_spin_subcrystals(self, k):
        cartan = CartanSpec("B", 2)
        crystal = almost_spin_subcrystal(2, 2, k)
        weight = add_weights(cartan.fundamental_weight(2), cartan.tfw(k))
        assert len(crystal) == weyl_size("B", 2, weight)
        assert closure_violations(crystal) == []

    @pytest.mark.parametrize("n", [1, 2])
    def test_motzkin_subcrystals(self, n):
        cartan = CartanSpec("B", n)
        for s in range(n + 1):
            for t in range(s + 1):
                crystal = motzkin_subcrystal(n, s, t)
                top = add_weights(cartan.fundamental_weight(n), cartan.tfw(n - s))
                assert len(crystal) == weyl_size("B", n, top)
                assert [b.weight for b in crystal.highest_weight_elements()] == [top]

    def test_motzkin_subcrystal_range(self):
        with pytest.raises(ValueError):
            motzkin_subcrystal(3, 1, 2)

    @pytest.mark.parametrize("coefficients, size", [((1, 0, 0), 7), ((0, 1, 0), 21)])
    def test_rigid_crystal(self, coefficients, size):
        assert len(rigid_crystal(3, coefficients)) == size

    def test_highest_weight_sequences(self):
        assert len(highest_weight_rigid(3, 2)) == 4


class TestStandardSets:
    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_motzkin_sets(self, t):
        tableaux = motzkin_standard_set(5, 3, t, 5)
        assert len(tableaux) == motzkin_triangle(5, 3) == 14
        assert all(T.is_standard(5) for T in tableaux)

    def test_motzkin_set_ranges(self):
        with pytest.raises(ValueError):
            motzkin_standard_set(3, 3, 0, 3)
        with pytest.raises(ValueError):
            motzkin_standard_set(3, 1, 0, 4)

    def test_virtualization(self):
        assert len(virtualization_filter(3, 1)) == 14
        assert virtualization_filter(2, 0) == [RigidTableau(())]


class TestAlternatingStrictPartitions:
    def test_parts_alternate(self):
        tau = ASP((3, 2, 1), GRAY)
        assert [p.color for p in tau.parts] == [GRAY, WHITE, GRAY]
        assert tau.next_color == WHITE
        assert str(tau) == "(3',2,1')"
        assert str(ASP((), GRAY)) == "()'"
        assert ColoredInt(3).succeq(ColoredInt(2))
        assert not ColoredInt(3, GRAY).succeq(ColoredInt(2))

    def test_from_parts(self):
        parts = [ColoredInt(2), ColoredInt(1, GRAY)]
        assert ASP.from_parts(parts) == ASP((2, 1), WHITE)
        with pytest.raises(ValueError):
            ASP.from_parts([ColoredInt(2), ColoredInt(1)])

    def test_spin_round_trip(self):
        for color in (WHITE, GRAY):
            for tau in asps(3, color):
                assert spin_to_asp(asp_to_spin(tau, 3)) == tau

    def test_append_one(self):
        assert asp_apply("f", 3, ASP(()), 2) == ASP((1,))
        assert asp_apply("f", 2, ASP(()), 2) is None
        assert asp_apply("f", 2, ASP((), GRAY), 2) == ASP((1,), GRAY)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_orbits(self, n):
        assert len(asp_orbit(ASP((), WHITE), n)) == 2**n
        assert len(asp_orbit(ASP((), GRAY), n)) == 2**n

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_operators_agree_with_spin_crystal(self, n):
        cartan = CartanSpec("D", n + 1)
        for color in (WHITE, GRAY):
            for tau in asps(n, color):
                b = element(cartan, [asp_to_spin(tau, n)])
                for i in range(1, n + 2):
                    for op in "ef":
                        new = asp_apply(op, i, tau, n)
                        expected = apply(op, i, b)
                        assert (new is None) == (expected is None)
                        if new is not None:
                            assert expected.atoms == (asp_to_spin(new, n),)


class TestRiordanSets:
    def test_almost_even(self):
        assert is_almost_even((1, 2, 0))
        assert is_almost_even((1, 1, 2))
        assert not is_almost_even((3, 1, 1))
        assert not is_almost_even((2, 2, 0))

    @pytest.mark.parametrize("x", [0, 1])
    def test_even(self, x):
        assert len(riordan_sets(3, 1, x, 3)) == riordan_triangle(4, 2) == 6

    @pytest.mark.parametrize("x", [0, 1])
    def test_odd(self, x):
        assert len(riordan_sets(4, 1, x, 4, odd=True)) == riordan_triangle(5, 3) == 10

    def test_ranges(self):
        with pytest.raises(ValueError):
            riordan_sets(3, 1, 2, 3)
        with pytest.raises(ValueError):
            riordan_sets(3, 2, 0, 2)

    def test_rank_bounds_the_entries(self):
        with pytest.raises(ValueError, match="exceeds the rank"):
            riordan_sets(2, 1, 0, 3)
        with pytest.raises(ValueError):
            riordan_sets(0, 0, 0, 0)
        assert len(riordan_sets(4, 1, 0, 3)) == len(riordan_sets(3, 1, 0, 3))

    def test_smallest_spin_subcrystal(self):
        crystal = spin_rigid_subcrystal(1, 0, 0)
        assert len(crystal) == 4
        assert closure_violations(crystal) == []
