"""Almost-Hermitian geometry and the almost-Kahler curvature identities."""

from .chart import (  # noqa
    STRUCTURE_FLAGS,
    AlmostHermitianChart,
    StructureGeometry,
    almost_hermitian,
    check_structure,
    structure_geometry)
from .forms import (  # noqa
    anti_invariant_curvature,
    curvature_on_form,
    curvature_pairing,
    form_inner,
    form_norm2,
    j_anti_invariant_part,
    j_invariant_part)
from .identities import (  # noqa
    EINSTEIN_TOLERANCE,
    kahler_defect,
    lebrun_identity_residuals,
    rough_laplacian_of_weyl,
    sekigawa_apostolov_residual,
    self_dual_weyl_divergence,
    weitzenbock_residual)
from .structure import (  # noqa
    CHERN_RICCI_NORMALIZATION,
    AKPointData,
    NablaStructure,
    AntiInvariantComponents,
    ak_point_data,
    chern_connection,
    chern_correction_jets,
    chern_ricci_exterior_derivative,
    chern_ricci_form,
    chern_ricci_jets,
    exterior_derivative_of_form,
    fundamental_form,
    hermitian_scalar,
    nabla_structure,
    anti_invariant_components,
    star_scalar,
    structure_residuals,
    wedge_identity_residual)
