"""
Process-level plumbing: logging setup and worker fan-out for distance searches.
"""

import logging
import sys
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import Any, TypeVar

log = logging.getLogger(__name__)

T = TypeVar("T")


def configure_logging(level: str = "WARNING", force: bool = False) -> None:
    """
    Configure the root logger with a stderr handler.

    Non-destructive by default: if the root logger already has handlers nothing
    is changed. Output goes to stderr so stdout stays reserved for results.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR)
        force: If True, clear existing handlers and force this configuration
    """
    root_logger = logging.getLogger()

    if root_logger.hasHandlers() and not force:
        return

    root_logger.setLevel(level.upper())

    if force:
        root_logger.handlers.clear()

    formatter = logging.Formatter(
        "%(asctime)s %(levelname)s %(name)s %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    root_logger.addHandler(handler)


def run_partitioned(fn: Callable[..., T], tasks: Sequence[tuple[Any, ...]], workers: int = 1) -> list[T]:
    """
    Call ``fn(*task)`` for every task and return the results in task order.

    With ``workers <= 1`` (the default) everything runs in this process, so the
    result never depends on scheduling. ``fn`` and its arguments must be picklable
    when workers are used.
    """
    if workers <= 1 or len(tasks) <= 1:
        return [fn(*task) for task in tasks]

    log.debug("Dispatching %d tasks to %d workers", len(tasks), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *task) for task in tasks]
        return [f.result() for f in futures]
