"""Asymptotic ends, boundary and bulk integrals, and the mass formula."""

from .bulk import (  # noqa
    BulkIntegral,
    MassFormulaReport,
    Pairing,
    bulk_hermitian_integral,
    chern_ricci_density,
    core_integral,
    integrate_entry,
    mass_formula_check,
    mass_formula_terms,
    tail_from_shells,
    topological_pairing)
from .end import (  # noqa
    GAMMA_TOLERANCE,
    ALEEnd,
    standard_structure)
from .exterior import (  # noqa
    covector,
    top_coefficient,
    two_form,
    wedge,
    wedge_power)
from .fitting import (  # noqa
    DecayFit,
    LimitFit,
    fit_decay,
    fit_limit,
    richardson_limit)
from .mass import (  # noqa
    MassEstimate,
    ThetaPotential,
    adm_integrand,
    adm_mass,
    adm_normalization,
    mass_via_theta,
    theta_boundary_integral,
    theta_normalization,
    theta_potential)
from .quadrature import (  # noqa
    SphereQuadrature,
    ball_integral,
    box_integral,
    box_rule,
    circle_rule,
    compensated_sum,
    evaluate_points,
    radial_rule,
    sphere_integral,
    sphere_quadrature,
    sphere_volume,
    worker_count)
