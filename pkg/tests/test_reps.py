import random
import pytest

from engine import build_root_system, casimir, character, decompose, multiply, weyl_dimension
from engine.errors import NonIntegralPeel, NotDominant, NotIntegral, NotWInvariant
from engine.reps import dominant_character, dominant_weights_up_to_dimension, is_integral, reconstruct
from engine.rootsys import geometry
from model import IrrepLabel, VirtualCharacter, weight


class TestWeylDimension:
    @pytest.mark.parametrize("j", ["0", "1/2", "1", "3/2", "7/2"])
    def test_b1(self, j):
        """Test that spin j of B1 has dimension 2j + 1."""
        rs = build_root_system("B", 1)
        lam = weight(j)
        assert weyl_dimension(rs, rs.form, lam) == 2 * lam[0] + 1

    @pytest.mark.parametrize(
        "coords,dim",
        [((0, 0), 1), ((1, 0), 5), (("1/2", "1/2"), 4), ((1, 1), 10), ((2, 0), 14), (("3/2", "1/2"), 16)],
    )
    def test_b2(self, coords, dim):
        """Test small B2 dimensions."""
        rs = build_root_system("B", 2)
        assert weyl_dimension(rs, rs.form, weight(*coords)) == dim

    def test_g2(self):
        """Test the 7 and 14 of G2."""
        rs = build_root_system("G2", 2)
        assert weyl_dimension(rs, rs.form, weight(2, 1)) == 7
        assert weyl_dimension(rs, rs.form, weight(3, 2)) == 14

    def test_a2_fundamental(self):
        """Test the defining representation of A2."""
        rs = build_root_system("A", 2)
        assert weyl_dimension(rs, rs.form, weight("2/3", "-1/3", "-1/3")) == 3

    def test_not_dominant(self):
        """Test rejection of a non-dominant weight."""
        rs = build_root_system("B", 2)
        with pytest.raises(NotDominant):
            weyl_dimension(rs, rs.form, weight(-1, 0))

    def test_not_integral(self):
        """Test rejection of a non-integral weight."""
        rs = build_root_system("B", 2)
        assert not is_integral(rs, weight("1/3", 0))
        with pytest.raises(NotIntegral):
            weyl_dimension(rs, rs.form, weight("1/3", 0))


class TestCharacter:
    def test_vector_of_b2(self):
        """Test the weights of the 5 of B2."""
        rs = build_root_system("B", 2)
        chi = character(rs, rs.form, weight(1, 0))
        assert chi.terms == {
            weight(1, 0): 1, weight(-1, 0): 1, weight(0, 1): 1, weight(0, -1): 1, weight(0, 0): 1,
        }

    def test_adjoint_zero_weight(self):
        """Test that the zero weight of the adjoint has multiplicity the rank."""
        for series, rank, lam in [("B", 2, weight(1, 1)), ("G2", 2, weight(3, 2))]:
            rs = build_root_system(series, rank)
            assert character(rs, rs.form, lam)[weight(0, 0)] == 2

    def test_dominant_character(self):
        """Test the dominant part of the 14 of B2."""
        rs = build_root_system("B", 2)
        assert dominant_character(rs, rs.form, weight(2, 0)) == {
            weight(2, 0): 1, weight(1, 1): 1, weight(1, 0): 1, weight(0, 0): 2,
        }

    def test_mass_equals_dimension(self):
        """Test that every multiplicity is positive and they sum to the dimension."""
        rs = build_root_system("B", 3)
        chi = character(rs, rs.form, weight(1, 1, 0))
        assert chi.mass == chi.dimension == weyl_dimension(rs, rs.form, weight(1, 1, 0))

    @pytest.mark.parametrize("series,rank,bound", [("A", 2, 2000), ("B", 2, 2000), ("G2", 2, 2000), ("D", 2, 400)])
    def test_weyl_invariant(self, series, rank, bound):
        """Test that every simple reflection preserves every character up to the dimension bound."""
        rs = build_root_system(series, rank)
        geo = geometry(rs)
        for lam in dominant_weights_up_to_dimension(rs, rs.form, bound):
            chi = character(rs, rs.form, lam)
            for i in range(rank):
                assert all(chi[geo.reflect_simple(w, i)] == m for w, m in chi.items())


class TestDecompose:
    def test_spin_squared(self):
        """Test 4 x 4 = 10 + 5 + 1 for B2."""
        rs = build_root_system("B", 2)
        spin = character(rs, rs.form, weight("1/2", "1/2"))
        terms = decompose(rs, rs.form, multiply(spin, spin))
        assert [(t.highest_weight, m) for t, m in terms] == [
            (weight(1, 1), 1), (weight(1, 0), 1), (weight(0, 0), 1),
        ]

    def test_reconstruct(self):
        """Test that decompose and reconstruct are inverse on a virtual character."""
        rs = build_root_system("G2", 2)
        chi = character(rs, rs.form, weight(2, 1)).scaled(3) - character(rs, rs.form, weight(0, 0))
        assert reconstruct(rs, rs.form, decompose(rs, rs.form, chi)) == chi

    @pytest.mark.parametrize("series,rank", [("A", 2), ("B", 2), ("G2", 2), ("B", 3)])
    def test_random_combinations(self, series, rank):
        """Test decompose after reconstruct on random combinations of up to four irreducibles."""
        rs = build_root_system(series, rank)
        pool = dominant_weights_up_to_dimension(rs, rs.form, 40)
        rng = random.Random(31)
        for _ in range(25):
            chosen = rng.sample(pool, rng.randint(1, 4))
            terms = [(IrrepLabel(highest_weight=lam, system=rs), rng.randint(-3, 3)) for lam in chosen]
            expected = {label.highest_weight: m for label, m in terms if m}
            peeled = decompose(rs, rs.form, reconstruct(rs, rs.form, terms))
            assert {label.highest_weight: m for label, m in peeled} == expected

    def test_clebsch_gordan(self):
        """Test 1 x 3/2 = 5/2 + 3/2 + 1/2 for B1."""
        rs = build_root_system("B", 1)
        product = multiply(character(rs, rs.form, weight(1)), character(rs, rs.form, weight("3/2")))
        assert {t.highest_weight: m for t, m in decompose(rs, rs.form, product)} == {
            weight("5/2"): 1, weight("3/2"): 1, weight("1/2"): 1,
        }

    def test_not_invariant(self):
        """Test rejection of a character that is not Weyl invariant."""
        rs = build_root_system("B", 2)
        with pytest.raises(NotWInvariant):
            decompose(rs, rs.form, VirtualCharacter.point(weight(1, 0)))

    def test_non_integral_peel(self):
        """Test rejection of an invariant character on non-integral weights."""
        rs = build_root_system("B", 2)
        orbit = {weight("1/2", 0): 1, weight("-1/2", 0): 1, weight(0, "1/2"): 1, weight(0, "-1/2"): 1}
        with pytest.raises(NonIntegralPeel):
            decompose(rs, rs.form, VirtualCharacter(orbit))


class TestCasimir:
    @pytest.mark.parametrize("j", ["0", "1/2", "1", "5/2"])
    def test_b1(self, j):
        """Test the B1 Casimir 2 j (j + 1)."""
        rs = build_root_system("B", 1)
        lam = weight(j)
        assert casimir(rs, rs.form, lam) == 2 * lam[0] * (lam[0] + 1)

    def test_non_integral_allowed(self):
        """Test that the Casimir accepts dominant non-integral weights."""
        rs = build_root_system("B", 1)
        assert casimir(rs, rs.form, weight("1/3")) == 2 * weight("1/3")[0] * weight("4/3")[0]


class TestDominantWeights:
    def test_b2_up_to_ten(self):
        """Test enumeration ordered by dimension then coordinates."""
        rs = build_root_system("B", 2)
        assert dominant_weights_up_to_dimension(rs, rs.form, 10) == [
            weight(0, 0), weight("1/2", "1/2"), weight(1, 0), weight(1, 1),
        ]

    def test_bound_below_one(self):
        """Test an empty sweep."""
        rs = build_root_system("B", 2)
        assert dominant_weights_up_to_dimension(rs, rs.form, 0) == []
