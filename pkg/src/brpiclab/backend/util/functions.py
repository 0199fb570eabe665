#!/usr/bin/env python3
"""Worker-pool helpers shared by the bimodule enumeration and the catalog filter."""

# third party imports
from tqdm.contrib.concurrent import process_map

# standard imports
import logging
import multiprocessing
import resource
from typing import Callable, Iterable, List, Optional, Union


logger = logging.getLogger(__name__)


def process_limit() -> Optional[int]:
    """Soft limit on the number of processes for this user, ``None`` when unlimited."""
    soft, _ = resource.getrlimit(resource.RLIMIT_NPROC)
    return None if soft == resource.RLIM_INFINITY or soft <= 0 else soft


def clamp_max_workers(max_workers: Union[int, None]) -> int:
    """Resolve a requested worker count.

    Zero, negative and ``None`` ask for a value suited to the host: two cores fewer than the
    machine has, at least one, and never above the process limit.

    Parameters
    ----------
    max_workers:
        The maximum number of workers requested

    Returns
    -------
        The number of workers to start
    """
    if max_workers is not None and max_workers > 0:
        return max_workers

    result = max(1, multiprocessing.cpu_count() - 2)
    limit = process_limit()
    if limit is not None:
        result = min(result, limit)
    if max_workers == 0:
        logger.info(f"Due to system load, setting maximum workers to {result}")
    return result


def calculate_chunksize(num_elements: int, max_workers: Optional[int] = None, scale_factor: int = 4) -> int:
    """Chunk size handing each worker about ``scale_factor`` chunks.

    Parameters
    ----------
    num_elements:
        The number of work items
    max_workers:
        The maximum number of workers to use
    scale_factor:
        Chunks per worker

    Returns
    -------
        The chunk size, at least 1
    """
    workers = clamp_max_workers(max_workers)
    return max(1, num_elements // (workers * scale_factor))


def parallel_map(func: Callable, *iterables: Iterable, max_workers: int = 1, desc: str = "", tqdm_class=None) -> List:
    """Map ``func`` over the zipped iterables, in-process for one worker, otherwise through ``process_map``.

    The result keeps the input order whatever the number of workers.
    """
    columns = [list(column) for column in iterables]
    if max_workers == 1 or len(columns[0]) < 2:
        return [func(*args) for args in zip(*columns)]
    workers = min(clamp_max_workers(max_workers), len(columns[0]))
    kwargs = {
        "max_workers": workers,
        "chunksize": calculate_chunksize(len(columns[0]), workers),
        "desc": desc,
    }
    if tqdm_class:
        kwargs["tqdm_class"] = tqdm_class
    logger.debug(f"{desc}: {len(columns[0])} items over {workers} workers")
    return process_map(func, *columns, **kwargs)
