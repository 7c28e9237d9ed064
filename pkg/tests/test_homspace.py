import pytest
from fractions import Fraction

from engine import (
    branching_multiplicity,
    build_root_system,
    eigenvalue,
    iter_spectrum,
    kostant_lowest,
    landau_levels,
    make_pair,
    simple_coefficients,
    spectrum,
    spin_dimension,
    spin_modules,
    weyl_dimension,
)
from engine.errors import (
    ClosureViolation,
    CutoffBeforeFirstLine,
    DimensionMismatch,
    EmptyComplement,
    NonPositiveScale,
    NotDominant,
    NotIntegral,
)
from engine.homspace import ground_energy
from model import weight
from tests.conftest import make


class TestMakePair:
    def test_b2_d2(self, b2_d2):
        """Test complement roots and Weyl vectors of S^4."""
        assert b2_d2.m_positive_roots == (weight(0, 1), weight(1, 0))
        assert b2_d2.rho_g == weight("3/2", "1/2")
        assert b2_d2.rho_eta == weight(1, 0)
        assert b2_d2.label == "B2/D2"

    def test_rho_difference_is_half_complement_sum(self, test_matrix):
        """Test rho_g - rho_eta = half the sum of the complement roots on every pair."""
        for pair, _ in test_matrix:
            half_sum = tuple(sum(a[k] for a in pair.m_positive_roots) / 2 for k in range(pair.g.ambient_dim))
            assert tuple(g - e for g, e in zip(pair.rho_g, pair.rho_eta)) == half_sum

    def test_closure_violation(self):
        """Test that the two short roots of B2 do not span a subalgebra."""
        b2 = build_root_system("B", 2)
        with pytest.raises(ClosureViolation):
            make_pair(b2, [weight(1, 0), weight(0, 1)], b2.form)

    def test_form_dimension(self):
        """Test a form of the wrong size."""
        b2 = build_root_system("B", 2)
        with pytest.raises(DimensionMismatch):
            make_pair(b2, [], build_root_system("B", 3).form)


class TestSpinModules:
    def test_b1_torus(self, b1_torus):
        """Test S+ = e^(1/2) and S- = e^(-1/2) on the 2-sphere."""
        spin = spin_modules(b1_torus)
        assert spin.s_plus.terms == {weight("1/2"): 1}
        assert spin.s_minus.terms == {weight("-1/2"): 1}

    def test_dimensions(self, test_matrix):
        """Test dim S+ = dim S- = 2^(|complement| - 1)."""
        for pair, _ in test_matrix:
            spin = spin_modules(pair)
            expected = 2 ** (len(pair.m_positive_roots) - 1)
            assert spin.s_plus.dimension == spin.s_minus.dimension == expected == spin_dimension(pair)

    def test_highest_weight_of_s_plus(self, test_matrix):
        """Test that the top weight of S+ is rho_g - rho_eta."""
        for pair, _ in test_matrix:
            top = tuple(g - e for g, e in zip(pair.rho_g, pair.rho_eta))
            assert spin_modules(pair).s_plus[top] == 1
            for w in spin_modules(pair).s_plus:
                gap = simple_coefficients(pair.g, tuple(t - x for t, x in zip(top, w)))
                assert all(c >= 0 for c in gap)

    def test_empty_complement(self):
        """Test that eta = g has no spinor module."""
        pair = make("B2/full")
        with pytest.raises(EmptyComplement):
            spin_modules(pair)
        with pytest.raises(EmptyComplement):
            spin_dimension(pair)


class TestEigenvalue:
    def test_sphere(self, b1_torus):
        """Test E = 2 lam (lam + 1) - 2 mu^2 on the 2-sphere."""
        assert eigenvalue(b1_torus, weight("5/2"), weight("5/2")) == 5
        assert eigenvalue(b1_torus, weight(3), weight(0)) == 24

    def test_four_sphere_functions(self, b2_d2):
        """Test k (k + 3) on functions on S^4."""
        for k in range(5):
            assert eigenvalue(b2_d2, weight(k, 0), weight(0, 0)) == k * (k + 3)

    def test_mu_not_dominant(self, b2_d2):
        """Test mu outside the eta chamber."""
        with pytest.raises(NotDominant):
            eigenvalue(b2_d2, weight(0, 0), weight(0, -1))

    def test_mu_not_integral(self, b2_d2):
        """Test mu off the weight lattice of g."""
        with pytest.raises(NotIntegral):
            eigenvalue(b2_d2, weight(0, 0), weight("1/2", 0))

    def test_mu_wrong_length(self, b2_d2):
        """Test mu with the wrong number of coordinates."""
        with pytest.raises(DimensionMismatch):
            eigenvalue(b2_d2, weight(0, 0), weight(0))

    def test_mu_off_sum_zero_hyperplane(self):
        """Test that an A-series mu outside the span of the roots is refused by every entry point."""
        pair = make("A1/torus")
        mu = weight(1, 0)
        with pytest.raises(NotIntegral):
            kostant_lowest(pair, mu)
        with pytest.raises(NotIntegral):
            spectrum(pair, mu, 3)
        with pytest.raises(NotIntegral):
            eigenvalue(pair, weight(0, 0), mu)

    def test_mu_in_sum_zero_hyperplane(self):
        """Test the charge-one A1 bundle, which lies in the hyperplane."""
        found = kostant_lowest(make("A1/torus"), weight("1/2", "-1/2"))
        assert found.irrep.highest_weight == weight(0, 0)
        assert found.multiplicity == 1


class TestKostantLowest:
    def test_sphere_example(self, b1_torus):
        """Test mu = 5/2 on the 2-sphere: lambda = 2 with multiplicity 5 at E = -1/2."""
        found = kostant_lowest(b1_torus, weight("5/2"))
        assert found.highest_weight == weight(2)
        assert found.energy == Fraction(-1, 2)
        assert found.multiplicity == 5

    def test_singular_mu(self, b2_d2):
        """Test that mu + rho_eta on a wall of g gives no lowest level."""
        assert kostant_lowest(b2_d2, weight(0, 0)) is None

    def test_half_spin_bundles(self, b2_d2):
        """Test that both half-spin types of S^4 reach the trivial representation."""
        for mu in (weight("1/2", "1/2"), weight("1/2", "-1/2")):
            found = kostant_lowest(b2_d2, mu)
            assert found.highest_weight == weight(0, 0)
            assert found.multiplicity == 1

    def test_multiplicity_is_weyl_dimension(self, test_matrix):
        """Test that the product formula agrees with the Weyl dimension of lambda."""
        for pair, mus in test_matrix:
            for mu in mus:
                found = kostant_lowest(pair, mu)
                if found is not None:
                    assert found.multiplicity == weyl_dimension(pair.g, pair.g.form, found.highest_weight)


class TestBranching:
    def test_methods_agree(self, test_matrix):
        """Test the alternating formula against full decomposition of the restriction."""
        for pair, mus in test_matrix:
            for line in spectrum(pair, mus[1], 4):
                for mu in mus:
                    assert branching_multiplicity(pair, line.highest_weight, mu) == branching_multiplicity(
                        pair, line.highest_weight, mu, method="decompose"
                    )

    def test_sphere(self, b1_torus):
        """Test that weight m occurs once in spin j exactly when |m| <= j."""
        assert branching_multiplicity(b1_torus, weight(2), weight(1)) == 1
        assert branching_multiplicity(b1_torus, weight(1), weight(2)) == 0


class TestSpectrum:
    def test_sphere_functions(self, b1_torus):
        """Test the spherical harmonics ladder on the 2-sphere."""
        lines = spectrum(b1_torus, weight(0), 4)
        assert [line.highest_weight for line in lines] == [weight(k) for k in range(4)]
        assert [line.energy for line in lines] == [0, 4, 12, 24]
        assert [line.degeneracy for line in lines] == [1, 3, 5, 7]
        assert all(line.frobenius_multiplicity == 1 for line in lines)

    def test_monopole_first_line(self, b1_torus):
        """Test the Frobenius lowest line for mu = 5/2."""
        first = spectrum(b1_torus, weight("5/2"), 1)[0]
        assert first.highest_weight == weight("5/2")
        assert first.energy == 5
        assert first.degeneracy == 6

    def test_energies_increase(self, test_matrix):
        """Test that lines come in non-decreasing energy."""
        for pair, mus in test_matrix:
            energies = [line.energy for line in spectrum(pair, mus[0], 8)]
            assert energies == sorted(energies)

    def test_iter_is_lazy(self, b2_d2):
        """Test that the generator yields the same prefix as the list form."""
        gen = iter_spectrum(b2_d2, weight(1, 0))
        first_three = [next(gen) for _ in range(3)]
        assert first_three == spectrum(b2_d2, weight(1, 0), 3)

    def test_cutoff_before_first_line(self, b2_d2):
        """Test a cutoff below every candidate."""
        with pytest.raises(CutoffBeforeFirstLine):
            spectrum(b2_d2, weight(0, 0), 5, hard_cutoff=Fraction(1))

    def test_ground_energy(self, b2_d2):
        """Test (rho_eta, rho_eta) - (rho_g, rho_g) on S^4."""
        assert ground_energy(b2_d2) == Fraction(-3, 2)


class TestLandauLevels:
    def test_scaling(self, b1_torus):
        """Test that every energy is multiplied by the prefactor."""
        lines = spectrum(b1_torus, weight(1), 3)
        scaled = landau_levels(lines, Fraction(1, 2))
        assert [s.energy for s in scaled] == [line.energy / 2 for line in lines]
        assert [s.degeneracy for s in scaled] == [line.degeneracy for line in lines]

    @pytest.mark.parametrize("scale", [0, -1])
    def test_non_positive(self, b1_torus, scale):
        """Test rejection of a non-positive prefactor."""
        with pytest.raises(NonPositiveScale):
            landau_levels(spectrum(b1_torus, weight(0), 1), scale)
