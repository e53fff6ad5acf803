"""Environment detection and logging utilities"""

import contextlib
import logging
import os
import pathlib
import sys
import time
from typing import Iterator

LOG_FILE_ENV = "KSYMP_LOG_FILE"
LOG_FORMAT = "%(asctime)s %(name)s[%(process)d]: %(levelname)s %(message)s"
LOG_DATEFMT = "%Y-%m-%dT%H:%M:%S"


def get_project_root() -> pathlib.Path:
    """Get the project root directory."""
    return pathlib.Path(__file__).parent.parent.parent


def is_dev() -> bool:
    """
    Check if running in development mode (from source) vs installed package.
    Development mode is detected when pyproject.toml exists in the parent directory of the package
    """
    return (get_project_root() / "pyproject.toml").exists()


def resolve_log_file() -> pathlib.Path | None:
    """Where log records go: $KSYMP_LOG_FILE, else ksymp.log in a source checkout"""
    override = os.environ.get(LOG_FILE_ENV)
    if override:
        return pathlib.Path(override)
    if is_dev():
        return get_project_root() / "ksymp.log"
    return None


def setup_logging(level: str | None = None) -> None:
    """Setup logging to a file, or to stderr for an installed package

    Standard output is never used: it carries the JSON results.
    """
    log_file = resolve_log_file()
    handler: logging.Handler
    if log_file is not None:
        handler = logging.FileHandler(log_file, mode="a", encoding="utf-8")
        default_level = "INFO"
    else:
        handler = logging.StreamHandler(sys.stderr)
        default_level = "WARNING"
    logging.basicConfig(
        level=(level or default_level).upper(),
        format=LOG_FORMAT,
        datefmt=LOG_DATEFMT,
        handlers=[handler],
        force=True,
    )


@contextlib.contextmanager
def measure(logger: logging.Logger, name: str) -> Iterator[None]:
    """Measure execution time of a block of code"""
    start = time.time()
    yield
    logger.info("%s took %f seconds", name, time.time() - start)
