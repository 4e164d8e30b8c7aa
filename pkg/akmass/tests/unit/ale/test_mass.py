"""Tests for the ADM mass, the transgression form and the mass formula."""

import math

import numpy as np

from akmass import (
    ALEEnd,
    CatalogEntry,
    MissingStrategyError,
    OutsideDomainError,
    UnsupportedStrategyError,
    adm_mass,
    adm_normalization,
    ball_integral,
    bulk_hermitian_integral,
    core_integral,
    core_scalar_integral,
    fubini_study_flux,
    get_entry,
    integrate_entry,
    mass_formula_check,
    mass_formula_terms,
    mass_via_theta,
    tail_from_shells,
    theta_normalization,
    theta_potential,
    topological_pairing)
from akmass.ale.bulk import hermitian_density
from akmass.tests.unit.ale._helpers import AleTestCase


class TestNormalizations(AleTestCase):

    def test_three_dimensions(self):
        """Test the classical 1 / (16 pi)."""
        self.assertAlmostEqual(adm_normalization(3), 1.0 / (16.0 * math.pi),
                               places=15)

    def test_theta_normalization(self):
        """Test 1 / (2 (2m - 1) pi^m) for surfaces."""
        self.assertAlmostEqual(theta_normalization(2),
                               1.0 / (6.0 * math.pi ** 2), places=15)

    def test_formula_terms(self):
        """Test the bulk and topological terms of the mass formula."""
        bulk, top = mass_formula_terms(2, 12.0 * math.pi ** 2, -math.pi)
        self.assertAlmostEqual(bulk, 1.0, places=12)
        self.assertAlmostEqual(top, 1.0 / 3.0, places=12)


class TestADMMass(AleTestCase):

    def test_schwarzschild(self):
        """Test the sphere values m (1 + m / 2r)^3 and their limit."""
        end = get_entry('schwarzschild', m=2.0).end
        estimate = adm_mass(end, (50.0, 100.0, 200.0, 400.0), degree=4)
        for r, value in zip(estimate.radii, estimate.values):
            self.assertAlmostEqual(value, 2.0 * (1.0 + 1.0 / r) ** 3,
                                   places=8)
        self.assertAlmostEqual(estimate.extrapolated, 2.0, delta=1e-3)
        self.assertEqual(len(estimate.fit_residuals), 4)
        self.assertNotIn('gamma_invariance', estimate.warnings)

    def test_burns(self):
        """Test the mass c / 3 of the Burns metric."""
        end = get_entry('burns', c=1.5).end
        estimate = adm_mass(end, (5.0, 10.0, 20.0), degree=4)
        for value in estimate.values:
            self.assertAlmostEqual(value, 0.5, places=8)
        self.assertAlmostEqual(estimate.extrapolated, 0.5, places=8)

    def test_flat_space(self):
        """Test that flat space has no mass."""
        end = get_entry('euclidean', dim=4).end
        estimate = adm_mass(end, (1.0, 2.0, 4.0), degree=2)
        self.assertEqual(estimate.values, (0.0, 0.0, 0.0))
        self.assertEqual(estimate.extrapolated, 0.0)

    def test_eguchi_hanson(self):
        """Test that the hyperkahler end has no mass."""
        end = get_entry('eguchi_hanson').end
        estimate = adm_mass(end, (10.0, 20.0, 40.0, 80.0), degree=6)
        self.assertLess(abs(estimate.extrapolated), 1e-3)
        self.assertNotIn('gamma_invariance', estimate.warnings)

    def test_radius_inside_core(self):
        """Test a radius inside the excluded core."""
        end = get_entry('schwarzschild').end
        self.helper_test_raises(adm_mass, OutsideDomainError, end,
                                (1.0, 10.0, 20.0))


class TestThetaPotential(AleTestCase):

    def test_exterior_derivative(self):
        """Test d theta = iF on the Burns metric."""
        entry = get_entry('burns')
        theta = theta_potential(entry.end, 4.0)
        for p in entry.sample_points(3, seed=2):
            self.assertLess(theta.residual(p), 1e-6)

    def test_vanishes_when_ricci_flat(self):
        """Test theta = 0 on Eguchi-Hanson."""
        entry = get_entry('eguchi_hanson')
        theta = theta_potential(entry.end, 6.0)
        self.assertAlmostEqual(theta.coefficient(6.0), 0.0, places=8)

    def test_mass_via_theta(self):
        """Test that both mass pipelines agree on the Burns metric."""
        end = get_entry('burns').end
        radii = (5.0, 10.0, 20.0)
        boundary = adm_mass(end, radii, degree=4)
        theta = mass_via_theta(end, radii, degree=4)
        self.assertAlmostEqual(theta.extrapolated, boundary.extrapolated,
                               delta=1e-4)

    def test_coefficient_integrated_inward(self):
        """Test that theta does not depend on the radius it starts from."""
        end = get_entry('burns').end
        outward = theta_potential(end, 4.0)
        inward = theta_potential(end, 4.0, base_radius=8.0)
        self.assertAlmostEqual(inward.coefficient(4.0),
                               outward.coefficient(4.0), delta=1e-9)

    def test_mass_via_theta_on_quotient(self):
        """Test the Gamma spot check of the theta pipeline on
        Eguchi-Hanson."""
        end = get_entry('eguchi_hanson').end
        estimate = mass_via_theta(end, (4.0, 8.0, 16.0), degree=4)
        self.assertNotIn('gamma_invariance', estimate.warnings)
        self.assertAlmostEqual(estimate.extrapolated, 0.0, places=6)

    def test_mass_via_theta_flags_non_invariant_integrand(self):
        """Test that a theta integrand that is not Gamma-invariant is
        flagged."""
        chart = get_entry('random_ak', seed=2).chart
        end = ALEEnd(chart, gamma_order=2, decay_tau=2.5, core_radius=1.0,
                     generators=(-np.eye(4),), cohomogeneity_one=True,
                     name='claimed_quotient')
        estimate = mass_via_theta(end, (3.0, 6.0, 12.0), degree=4)
        self.assertIn('gamma_invariance', estimate.warnings)

    def test_non_invariant_end(self):
        """Test that theta needs a cohomogeneity-one end."""
        for entry in (get_entry('random_ak'), get_entry('schwarzschild')):
            self.helper_test_raises(theta_potential, UnsupportedStrategyError,
                                    entry.end, 5.0)


class TestMassFormula(AleTestCase):

    def test_eguchi_hanson(self):
        """Test that every term of the formula vanishes on Eguchi-Hanson."""
        entry = get_entry('eguchi_hanson')
        report = mass_formula_check(entry, (10.0, 20.0, 40.0, 80.0),
                                    degree=6)
        self.assertLess(abs(report.lhs), 1e-3)
        self.assertLess(abs(report.rhs_bulk), 1e-3)
        self.assertLess(abs(report.rhs_topological), 1e-3)
        self.assertLess(report.discrepancy, 2e-3)
        self.assertEqual(report.strategy, 'cutoff')

    def test_burns(self):
        """Test that the topological term carries the Burns mass."""
        entry = get_entry('burns')
        report = mass_formula_check(entry, (5.0, 10.0, 20.0), degree=6)
        self.assertAlmostEqual(report.lhs, 1.0 / 3.0, places=6)
        self.assertLess(abs(report.rhs_bulk), max(report.error_bar, 1e-6))
        self.assertLess(report.discrepancy, 1e-2 * report.lhs)

    def test_burns_pairing(self):
        """Test <c1, [omega]> = -pi c from cutoff data."""
        pairing = topological_pairing(get_entry('burns', c=2.0), degree=6)
        self.assertEqual(pairing.strategy, 'cutoff')
        self.assertAlmostEqual(pairing.value, -2.0 * math.pi, delta=2e-2)

    def test_exact_pairing(self):
        """Test a pairing taken from the catalog."""
        pairing = topological_pairing(get_entry('random_ak'))
        self.assertEqual(pairing.strategy, 'exact')
        self.assertEqual(pairing.value, 0.0)

    def test_bulk_of_scalar_flat_metric(self):
        """Test a vanishing bulk integral without a tail."""
        bulk = bulk_hermitian_integral(get_entry('burns'), degree=4)
        self.assertAlmostEqual(bulk.value, 0.0, places=8)
        self.assertEqual(bulk.tail, 0.0)

    def test_requirements(self):
        """Test entries the formula cannot be checked on."""
        self.helper_test_raises(mass_formula_check, UnsupportedStrategyError,
                                get_entry('schwarzschild'), (5.0, 10.0, 20.0))
        self.helper_test_raises(mass_formula_check, UnsupportedStrategyError,
                                get_entry('fubini_study'), (5.0, 10.0, 20.0))
        self.helper_test_raises(topological_pairing, MissingStrategyError,
                                get_entry('schwarzschild_4d'))


class TestBulkIntegral(AleTestCase):

    RADII = [2.0, 2.5, 3.0, 3.5, 4.0]

    def test_tail_of_decaying_shells(self):
        """Test the tail K R^(1-q) / (q - 1) of shells 2 r^-3."""
        shells = [2.0 * r ** -3 for r in self.RADII]
        tail, exponent, warnings = tail_from_shells(self.RADII, shells, 1.0)
        self.assertAlmostEqual(tail, 1.0 / 16.0, places=10)
        self.assertAlmostEqual(exponent, 3.0, places=10)
        self.assertEqual(warnings, [])

    def test_negligible_tail(self):
        """Test that shells far below the inner part give no tail."""
        shells = [1e-11 * r ** -3 for r in self.RADII]
        tail, exponent, warnings = tail_from_shells(self.RADII, shells, 1.0)
        self.assertEqual(tail, 0.0)
        self.assertAlmostEqual(exponent, 3.0, places=6)
        self.assertEqual(warnings, [])

    def test_divergent_tail(self):
        """Test shells decaying too slowly for a finite tail."""
        shells = [r ** -0.5 for r in self.RADII]
        tail, exponent, warnings = tail_from_shells(self.RADII, shells, 1.0)
        self.assertTrue(math.isnan(tail))
        self.assertAlmostEqual(exponent, 0.5, places=10)
        self.assertEqual(warnings, ['divergent_tail'])

    def test_core_integral_of_fubini_study(self):
        """Test the closed form of int s dv_g over |z| < 1 on CP^2."""
        entry = get_entry('fubini_study')
        numeric = ball_integral(lambda x: hermitian_density(entry, x), 4,
                                0.0, 1.0, degree=2, radial_nodes=8, panels=2)
        closed = core_scalar_integral(2, fubini_study_flux(2), 1.0)
        self.assertAlmostEqual(closed, 3.0 * math.pi ** 2, places=10)
        self.assertAlmostEqual(numeric, closed, places=6)

    def test_cores_of_scalar_flat_entries(self):
        """Test that the Eguchi-Hanson and Burns cores contribute
        nothing."""
        for entry in (get_entry('eguchi_hanson', a=1.5),
                      get_entry('burns', c=2.0)):
            self.assertGreater(entry.integration_hint['inner_radius'], 0.0)
            self.assertAlmostEqual(core_integral(entry), 0.0, places=12)

    def test_bulk_of_ricci_flat_metric(self):
        """Test a vanishing bulk integral on Eguchi-Hanson."""
        bulk = bulk_hermitian_integral(get_entry('eguchi_hanson'), degree=4)
        self.assertLess(abs(bulk.value), 1e-6)
        self.assertEqual(bulk.warnings, ())

    def test_radial_nodes_need_an_inner_radius(self):
        """Test that radial nodes may not approach an excluded origin."""
        burns = get_entry('burns')
        entry = CatalogEntry('punctured', burns.chart, 'kahler',
                             end=burns.end,
                             integration_hint={'scheme': 'radial'})
        self.helper_test_raises(integrate_entry, OutsideDomainError, entry,
                                lambda x: 1.0, 4.0)
