import logging
import traceback
from pathlib import Path
from typing import Optional

import click

LOGGER_NAME = "skewalg"
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

logger = logging.getLogger(LOGGER_NAME)
logger.addHandler(logging.NullHandler())


#################### LOGGING HANDLER ####################
class ConsoleEchoHandler(logging.Handler):
    """Echo warnings and errors to stderr, with origin or traceback attached."""

    def emit(self, record):
        if record.levelno < logging.WARNING:
            return
        try:
            entry = self.format(record)
            if record.exc_info:
                exc_text = "".join(traceback.format_exception(*record.exc_info))
                entry = f"{entry}\n{exc_text}"
            elif record.levelno >= logging.ERROR:
                entry = f"{entry}\n[{record.pathname}:{record.lineno} in {record.funcName}]"
        except Exception:
            entry = record.getMessage()
        click.echo(entry, err=True)


def configure_logging(level: str = "WARNING", log_file: Optional[Path] = None,
                      echo: bool = True):
    """Install file and console handlers on the package logger.

    Calling this twice replaces the handlers installed the first time.
    """
    formatter = logging.Formatter(LOG_FORMAT)
    for handler in list(logger.handlers):
        if not isinstance(handler, logging.NullHandler):
            logger.removeHandler(handler)
            handler.close()

    logger.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
    logger.propagate = False

    if log_file is not None:
        log_file = Path(log_file)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    if echo:
        console = ConsoleEchoHandler()
        console.setFormatter(formatter)
        logger.addHandler(console)
    return logger


#################### LOG HELPER ####################
def log(type: str, message, **kwargs):

    message = str(message)
    if "detail" in kwargs and kwargs.get("detail") is not None:
        message += "\n" + str(kwargs.get("detail"))

    kind = type.upper()
    if kind == "INFO":
        logger.info(message)
    elif kind in ("WARN", "WARNING"):
        logger.warning(message)
    elif kind == "ERROR":
        logger.error(message)
    elif kind == "DEBUG":
        logger.debug(message)
    else:
        logger.info(message)
