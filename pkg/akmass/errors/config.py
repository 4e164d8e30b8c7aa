"""Exception types for run configuration problems."""

from .base import AkMassError


class ConfigError(AkMassError):
    """An exception type for invalid run configuration. This exception type
    should be sub-classed and is not meant to be raised explicitly.

    """


class UnknownMetricError(ConfigError):
    """An exception type for catalog names that do not exist.

    The message names every valid option::

        >>> from akmass import get_entry
        >>> get_entry('taub_nut')
        Traceback (most recent call last):
            ...
        akmass.errors.config.UnknownMetricError: Unknown metric "taub_nut"; \
valid options are: ...

    """


class ConfigFileError(ConfigError):
    """An exception type for configuration files that cannot be read or
    contain invalid values."""
