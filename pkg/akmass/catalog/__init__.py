"""Explicit test geometries and the global checks run on them."""

from .checks import (  # noqa
    AREA_LEVELS,
    BlairReport,
    PenroseReport,
    blair_check,
    curvature_residuals,
    exceptional_curve_area,
    flag_residuals,
    penrose_check)
from .entries import (  # noqa
    FACTORIES,
    FLAGS,
    STRUCTURES,
    CatalogEntry,
    KnownValue,
    builtin_entries,
    burns,
    eguchi_hanson,
    euclidean,
    flat_torus_kahler,
    fubini_study,
    get_entry,
    random_ak,
    round_sphere,
    schwarzschild,
    schwarzschild_4d)
from .kahler import (  # noqa
    burns_flux,
    burns_profile,
    core_scalar_integral,
    eguchi_hanson_flux,
    eguchi_hanson_profile,
    fubini_study_flux,
    fubini_study_profile,
    potential_chart,
    potential_metric)
from .polar import (  # noqa
    RandomPerturbation,
    polar_chart,
    polar_compatible_structure,
    polar_jets)
