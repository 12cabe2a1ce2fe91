"""
Report formatting for command results.

Reports are rendered either as a console summary or as JSON with the stable
schema ``{command, inputs, result, certificates, failures}``.
"""

import json
import logging
from typing import Any, Dict, Optional

from models import CommandReport


class ReportFormatter:
    """Turns :class:`CommandReport` objects into console text or JSON."""

    def __init__(self, logger: Optional[logging.Logger] = None):
        self.logger = logger or logging.getLogger('koszul_toolkit.commands')

    def to_json(self, report: CommandReport) -> str:
        return json.dumps(report.to_dict(), indent=2, ensure_ascii=False, sort_keys=True)

    def from_json(self, text: str) -> CommandReport:
        return CommandReport.from_dict(json.loads(text))

    def format_console_report(self, report: CommandReport) -> str:
        """
        Format report for console display.

        Args:
            report: Command report

        Returns:
            Formatted console string
        """
        sections = []
        sections.append("=" * 60)
        sections.append(f"{report.command.upper()}: {', '.join(report.inputs) or '-'}")
        sections.append("=" * 60)

        for key, value in report.result.items():
            sections.extend(self._format_value(key, value))

        if report.certificates:
            sections.append("")
            sections.append(f"Certificates ({len(report.certificates)}):")
            sections.append("-" * 60)
            for certificate in report.certificates:
                sections.append(f"  {self._inline(certificate)}")

        sections.append("")
        if report.failures:
            sections.append(f"FAILED ({len(report.failures)}):")
            for failure in report.failures:
                sections.append(f"  - {self._inline(failure)}")
        else:
            sections.append("OK")
        sections.append("=" * 60)
        return "\n".join(sections)

    def export_json_report(self, report: CommandReport, filepath: str) -> None:
        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(self.to_json(report))
        self.logger.info(f"JSON report exported to {filepath}")

    def _format_value(self, key: str, value: Any, indent: str = "  "):
        label = key.replace('_', ' ').capitalize()
        if isinstance(value, list) and value and all(isinstance(v, (str, int)) for v in value):
            if len(value) <= 6 and sum(len(str(v)) for v in value) < 60:
                return [f"{indent}{label}: {', '.join(str(v) for v in value)}"]
            lines = [f"{indent}{label}:"]
            lines.extend(f"{indent}  {v}" for v in value)
            return lines
        if isinstance(value, list):
            lines = [f"{indent}{label}:"]
            lines.extend(f"{indent}  {self._inline(v)}" for v in value)
            return lines
        if isinstance(value, dict):
            lines = [f"{indent}{label}:"]
            for sub_key, sub_value in value.items():
                lines.extend(self._format_value(sub_key, sub_value, indent + "  "))
            return lines
        return [f"{indent}{label}: {value}"]

    @staticmethod
    def _inline(value: Any) -> str:
        if isinstance(value, dict):
            return ", ".join(f"{k}={ReportFormatter._inline(v)}" for k, v in value.items())
        if isinstance(value, list):
            return "[" + ", ".join(ReportFormatter._inline(v) for v in value) + "]"
        return str(value)


def report_summary(report: CommandReport) -> Dict[str, Any]:
    return {
        'command': report.command,
        'ok': report.exit_code == 0,
        'certificates': len(report.certificates),
        'failures': len(report.failures),
    }


__all__ = ['ReportFormatter', 'report_summary']
