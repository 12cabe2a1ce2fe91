"""Console and file logging for the toolkit, plus progress summaries for long certification runs."""

import logging
import logging.handlers
import threading
import time
from typing import Any, Dict, Optional

PACKAGE_LOGGER = 'koszul_toolkit'
LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')

DEFAULT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DEFAULT_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

_COLORS = {
    'DEBUG': 'cyan',
    'INFO': 'green',
    'WARNING': 'yellow',
    'ERROR': 'red',
    'CRITICAL': 'red,bg_white',
}


def _resolve_level(verbosity: int, level: Optional[str]) -> int:
    if level:
        name = level.upper()
        if name not in LEVELS:
            raise ValueError(f"Invalid log level '{level}'. Must be one of: {', '.join(LEVELS)}")
        return getattr(logging, name)
    if verbosity >= 2:
        return logging.DEBUG
    return logging.INFO if verbosity == 1 else logging.WARNING


def _console_formatter(log_format: str, date_format: str) -> logging.Formatter:
    try:
        import colorlog
    except ImportError:
        return logging.Formatter(fmt=log_format, datefmt=date_format)
    return colorlog.ColoredFormatter(fmt='%(log_color)s' + log_format, datefmt=date_format, log_colors=_COLORS)


def setup_logging(
    verbosity: int = 0,
    log_file: Optional[str] = None,
    log_format: Optional[str] = None,
    date_format: Optional[str] = None,
    level: Optional[str] = None
) -> logging.Logger:
    """
    Configure the ``koszul_toolkit`` logger.

    Calling it again replaces the handlers of the previous call.

    Args:
        verbosity: 0 = WARNING, 1 = INFO, 2 or more = DEBUG
        log_file: Optional path of a rotating log file
        log_format: Optional format string
        date_format: Optional date format string
        level: Explicit level name; overrides ``verbosity``

    Returns:
        The configured package logger

    Raises:
        ValueError: If ``level`` is not a standard level name
    """
    log_level = _resolve_level(verbosity, level)
    log_format = log_format or DEFAULT_FORMAT
    date_format = date_format or DEFAULT_DATE_FORMAT

    package = logging.getLogger(PACKAGE_LOGGER)
    package.setLevel(log_level)
    package.propagate = False
    package.handlers.clear()

    console = logging.StreamHandler()
    console.setLevel(log_level)
    console.setFormatter(_console_formatter(log_format, date_format))
    package.addHandler(console)

    if log_file:
        try:
            rotating = logging.handlers.RotatingFileHandler(
                log_file, maxBytes=10 * 1024 * 1024, backupCount=5, encoding='utf-8'
            )
        except OSError as e:
            package.warning(f"Failed to set up file logging: {e}")
        else:
            rotating.setLevel(log_level)
            rotating.setFormatter(logging.Formatter(fmt=log_format, datefmt=date_format))
            package.addHandler(rotating)
            package.info(f"Logging to file: {log_file}")

    package.debug(f"Log level: {logging.getLevelName(log_level)}")
    return package


class ProgressTracker:
    """Counts passed and failed checks of a batch and logs a summary on exit.

    ``increment`` may be called from worker threads.
    """

    def __init__(self, total: int, item_type: str = "items"):
        self.total = total
        self.item_type = item_type
        self.passed = 0
        self.failed = 0
        self.start_time: Optional[float] = None
        self.logger = logging.getLogger(PACKAGE_LOGGER)
        self._lock = threading.Lock()

    @property
    def processed(self) -> int:
        return self.passed + self.failed

    def __enter__(self) -> 'ProgressTracker':
        self.start_time = time.time()
        self.logger.info(f"Checking {self.total} {self.item_type}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.start_time is None:
            return
        stats = self.get_stats()
        if self.failed == 0:
            emit = self.logger.info
        elif self.failed == self.total:
            emit = self.logger.error
        else:
            emit = self.logger.warning
        emit(
            f"{self.item_type}: {stats['successful']}/{stats['total']} passed, "
            f"{stats['failed']} failed in {stats['elapsed_time_formatted']}"
        )

    def increment(self, success: bool = True) -> None:
        with self._lock:
            if success:
                self.passed += 1
            else:
                self.failed += 1
            done = self.processed
        if not success or done % 10 == 0:
            self.logger.info(
                f"{done}/{self.total} {self.item_type} checked, last {'passed' if success else 'failed'}"
            )

    def get_stats(self) -> Dict[str, Any]:
        elapsed = time.time() - self.start_time if self.start_time is not None else 0.0
        return {
            'total': self.total,
            'processed': self.processed,
            'successful': self.passed,
            'failed': self.failed,
            'success_rate': self.passed / self.total * 100 if self.total else 0,
            'elapsed_time': elapsed,
            'elapsed_time_formatted': self._format_elapsed(elapsed),
        }

    @staticmethod
    def _format_elapsed(seconds: float) -> str:
        if seconds < 60:
            return f"{seconds:.1f}s"
        whole = int(seconds)
        hours, rest = divmod(whole, 3600)
        minutes, secs = divmod(rest, 60)
        if hours:
            return f"{hours}h {minutes}m {secs}s"
        return f"{minutes}m {secs}s"


def log_section(title: str) -> None:
    package = logging.getLogger(PACKAGE_LOGGER)
    rule = "=" * 60
    package.info(rule)
    package.info(f"  {title.upper()}")
    package.info(rule)


def log_config(config: Dict[str, Any], prefix: str = "") -> None:
    """Log the effective configuration, one dotted key per line."""
    package = logging.getLogger(PACKAGE_LOGGER)
    if not prefix:
        log_section("Configuration")
    for key in sorted(config):
        value = config[key]
        path = f"{prefix}.{key}" if prefix else key
        if isinstance(value, dict):
            log_config(value, path)
        else:
            package.info(f"{path}: {value}")


__all__ = [
    'PACKAGE_LOGGER',
    'LEVELS',
    'setup_logging',
    'ProgressTracker',
    'log_section',
    'log_config',
]
