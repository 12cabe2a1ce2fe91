"""
Command layer tying the readers, the Gröbner engine and the verifiers together.

Each subcommand produces a report with a stable JSON form; mathematical
failures are reported, never raised.
"""

from .command_runner import CommandRunner
from .command_report import ReportFormatter, report_summary

__all__ = [
    'CommandRunner',
    'ReportFormatter',
    'report_summary',
]
