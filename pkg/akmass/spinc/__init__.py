"""Spinors of the canonical spin^c structure and the Witten integrand."""

from .dirac import (  # noqa
    WittenIntegrand,
    constant_spinor_derivatives,
    dirac_constant_spinor_residual,
    frame_rotation_invariance,
    norm_equality_residual,
    spinor_covariant_derivative,
    witten_integrand,
    witten_integrand_identity_residual)
from .fock import (  # noqa
    MAX_COMPLEX_DIM,
    FockSpinor,
    cl_omega_spectrum,
    clifford_generators,
    clifford_matrix,
    clifford_one_form,
    clifford_two_form,
    clifford_two_form_matrix,
    degree_mask,
    standard_symplectic_form,
    two_point_function)
from .frame import (  # noqa
    FRAME_TOLERANCE,
    SpinConnectionData,
    UnitaryFrame,
    adapted_frame,
    spin_connection)
