"""akmass's command-line interface."""

from .config import RunConfig  # noqa
from .core import main, run_cli  # noqa
from .report import (  # noqa
    CheckRecord,
    VerificationReport,
    emit_mass_table,
    emit_report)
