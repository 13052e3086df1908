"""Structured logging configuration using structlog."""

import logging
import sys
from typing import Any

import structlog


# Map string levels to logging module constants
LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


def _stderr_logger(*args: Any) -> structlog.PrintLogger:
    # sys.stderr is read when the logger is built, not when logging is configured
    return structlog.PrintLogger(file=sys.stderr)


def configure_logging(
    level: str = "INFO",
    format: str = "console",
) -> None:
    """Configure structlog for chaosbox.

    Logs always go to stderr; stdout is reserved for command output such as
    hex tables and key=value reports.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        format: "console" for human-readable lines, "json" for machine-readable
    """
    log_level = LOG_LEVELS.get(level.upper(), logging.INFO)

    shared_processors: list[structlog.typing.Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.StackInfoRenderer(),
        structlog.dev.set_exc_info,
        structlog.processors.TimeStamper(fmt="iso"),
    ]

    if format == "json":
        renderer: list[structlog.typing.Processor] = [
            structlog.processors.dict_tracebacks,
            structlog.processors.JSONRenderer(),
        ]
    else:
        renderer = [structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())]

    structlog.configure(
        processors=[*shared_processors, *renderer],
        wrapper_class=structlog.make_filtering_bound_logger(log_level),
        context_class=dict,
        logger_factory=_stderr_logger,
        cache_logger_on_first_use=False,
    )


def get_logger(name: str | None = None) -> structlog.stdlib.BoundLogger:
    """Get a structured logger, bound with ``logger_name`` when given.

    The logger stays lazy, so module-level loggers pick up whatever
    ``configure_logging`` sets later.
    """
    if name:
        return structlog.get_logger(logger_name=name)
    return structlog.get_logger()


def configure_default_logging() -> None:
    """Quiet library defaults: WARNING and above, console format, stderr.

    Leaves an existing structlog configuration alone, so an application that
    configured structlog itself keeps its setup.
    """
    if not structlog.is_configured():
        configure_logging(level="WARNING")


configure_default_logging()
