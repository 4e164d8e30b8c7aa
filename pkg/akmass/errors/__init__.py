"""akmass error types."""

# import base exception types
from .arguments import ArgumentError  # noqa
from .base import AkMassError  # noqa
from .config import ConfigError  # noqa
from .numerics import NumericalError  # noqa
from .preconditions import PreconditionError  # noqa
from .strategies import StrategyError  # noqa
from .structure import StructureError  # noqa

# import specific exception types
from .arguments import (  # noqa
    DimensionMismatchError,
    InvalidArgumentTypeError,
    InvalidArgumentValueError,
    RequiredArgumentError)
from .config import (  # noqa
    ConfigFileError,
    UnknownMetricError)
from .numerics import (  # noqa
    ArithmeticDomainError,
    DegenerateMetricError,
    InsufficientJetOrderError,
    QuadratureError,
    SquareRootFailureError)
from .preconditions import (  # noqa
    NonEinsteinError,
    NotCompactError,
    OutsideDomainError)
from .strategies import (  # noqa
    MissingStrategyError,
    UnsupportedStrategyError)
from .structure import (  # noqa
    CalibrationError,
    CompatibilityError,
    InternalConsistencyError)
