"""Exception types for computations without an applicable strategy."""

from .base import AkMassError


class StrategyError(AkMassError):
    """An exception type for missing computational strategies. This
    exception type should be sub-classed and is not meant to be raised
    explicitly.

    """


class UnsupportedStrategyError(StrategyError):
    """An exception type for entries an algorithm cannot handle.

    The radial construction of the transgression form only exists for
    cohomogeneity-one ends::

        >>> from akmass import get_entry, theta_potential
        >>> end = get_entry('random_ak', seed=3).end
        >>> theta_potential(end, 10.0)
        Traceback (most recent call last):
            ...
        akmass.errors.strategies.UnsupportedStrategyError: End random_ak has \
no cohomogeneity-one profile; supply theta analytically

    """


class MissingStrategyError(StrategyError):
    """An exception type for a pairing that has neither an exact value nor
    cutoff data.

    ::

        >>> from akmass import get_entry, topological_pairing
        >>> topological_pairing(get_entry('schwarzschild'))
        Traceback (most recent call last):
            ...
        akmass.errors.strategies.MissingStrategyError: Entry schwarzschild \
provides neither an exact pairing nor cutoff data

    """
