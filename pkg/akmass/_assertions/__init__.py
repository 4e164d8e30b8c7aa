"""Utilities for making internal assertions."""

from .arguments import (  # noqa
    assert_in_range,
    assert_index,
    assert_point,
    assert_positive,
    assert_strictly_increasing)
