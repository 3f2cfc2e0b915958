"""Logging helpers: collect records into a report or print them to the console."""

import logging
import sys
import threading

THREAD_LOCAL = threading.local()

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


class ReportLogHandler(logging.Handler):
    """Keeps formatted log records in :py:attr:`lines` so a report can embed them."""

    def __init__(self):
        super().__init__()
        self.lines: list[str] = []
        self.setFormatter(logging.Formatter(LOG_FORMAT))

    def emit(self, record):
        if THREAD_LOCAL.__dict__.get("depthlab.loghandler", False):
            return

        try:
            THREAD_LOCAL.__dict__["depthlab.loghandler"] = True
            self.lines.append(self.format(record))
        except Exception:  # noqa pylint: disable=broad-exception-caught
            self.handleError(record)
        finally:
            THREAD_LOCAL.__dict__["depthlab.loghandler"] = False


def setup_report_logging(logger_name: str | None = "depthlab", logging_level: int = logging.DEBUG) -> ReportLogHandler:
    """Attaches a :py:class:`ReportLogHandler` to the logger and returns it."""
    logger = logging.getLogger(logger_name)
    handler = ReportLogHandler()
    handler.setLevel(logging_level)
    logger.addHandler(handler)
    if logger.getEffectiveLevel() > logging_level:
        logger.setLevel(logging_level)
    return handler


def setup_console_logging(logger_name: str | None = "depthlab", logging_level: int = logging.INFO) -> logging.Handler:
    """Prints records of the logger to ``stderr``."""
    logger = logging.getLogger(logger_name)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler.setLevel(logging_level)
    logger.addHandler(handler)
    if logger.getEffectiveLevel() > logging_level:
        logger.setLevel(logging_level)
    return handler


def remove_handler(handler: logging.Handler, logger_name: str | None = "depthlab") -> None:
    logging.getLogger(logger_name).removeHandler(handler)
