"""Pointwise Riemannian geometry of coordinate charts."""

from .calculus import (  # noqa
    codifferential_jets,
    covariant_derivative,
    divergence,
    divergence_and_laplacian,
    field_jets,
    laplacian,
    laplacian_jets,
    nabla_jets,
    second_bianchi_residual)
from .chart import (  # noqa
    MetricChart,
    rotate_chart)
from .curvature import (  # noqa
    CurvaturePacket,
    christoffel,
    curvature_operator_matrix,
    curvature_packet,
    kulkarni_nomizu,
    orthonormal_frame,
    sectional_curvature,
    self_dual_basis,
    weyl_jets,
    weyl_tensor)
from .geometry import (  # noqa
    PointGeometry,
    connection_curvature,
    geometry,
    point_geometry)
