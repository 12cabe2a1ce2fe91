"""Data models shared by the command runner and the report formatter."""

import logging
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Any, Dict, List, Optional

logger = logging.getLogger('koszul_toolkit')


class Command(Enum):
    """Subcommands of the command-line front end."""
    GB = "gb"
    COLON = "colon"
    CLOSED = "closed"
    BEI = "bei"
    KOSZUL_VERIFY = "koszul-verify"
    HIBI = "hibi"
    TORIC = "toric"


class ExitCode(IntEnum):
    OK = 0
    FAILURE = 1
    INPUT_ERROR = 2


@dataclass
class Invocation:
    """One parsed command line."""

    command: Command
    inputs: List[str] = field(default_factory=list)
    order: Optional[str] = None
    json: bool = False
    certify: bool = False
    seed: int = 0
    options: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command.value,
            'inputs': list(self.inputs),
            'order': self.order,
            'json': self.json,
            'certify': self.certify,
            'seed': self.seed,
            'options': dict(self.options),
        }


@dataclass
class CommandReport:
    """Outcome of one subcommand.

    ``ok`` is False whenever a mathematical claim failed to verify; the JSON
    schema is ``{command, inputs, result, certificates, failures}``.
    """

    command: str
    inputs: List[str] = field(default_factory=list)
    result: Dict[str, Any] = field(default_factory=dict)
    certificates: List[Dict[str, Any]] = field(default_factory=list)
    failures: List[Dict[str, Any]] = field(default_factory=list)
    ok: bool = True

    @property
    def exit_code(self) -> ExitCode:
        return ExitCode.OK if self.ok and not self.failures else ExitCode.FAILURE

    def fail(self, reason: str, **details: Any) -> None:
        """Record a mathematical failure."""
        self.ok = False
        self.failures.append({'reason': reason, **details})

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'inputs': list(self.inputs),
            'result': self.result,
            'certificates': self.certificates,
            'failures': self.failures,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CommandReport':
        failures = list(data.get('failures', []))
        return cls(
            command=data['command'],
            inputs=list(data.get('inputs', [])),
            result=dict(data.get('result', {})),
            certificates=list(data.get('certificates', [])),
            failures=failures,
            ok=not failures,
        )


__all__ = ['Command', 'ExitCode', 'Invocation', 'CommandReport']
