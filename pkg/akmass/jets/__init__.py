"""Truncated multivariate Taylor jets."""

from .context import JetContext, UNARY_FUNCTIONS  # noqa
from .finite_difference import (  # noqa
    central_difference,
    finite_difference_check)
from .jet import (  # noqa
    Jet,
    atan2,
    cos,
    exp,
    jet_arith,
    jet_array,
    lift_coordinate,
    log,
    power,
    sin,
    sqrt)
from .multi_index import (  # noqa
    MAX_DIM,
    MAX_ORDER,
    coefficient_count,
    jet_tables,
    multi_index_factorial,
    multi_indices)
