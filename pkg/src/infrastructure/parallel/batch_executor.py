"""
Ordered worker pool for batch image jobs.

Results always come back in task order, so anything written from
them is independent of the worker count and of scheduling.
"""

import logging
import multiprocessing as mp
from typing import Callable, List, Optional, Sequence, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class BatchExecutor:
    """
    Run a function over tasks, serially or in a process pool.

    The function and tasks must be picklable when ``workers > 1``
    (top-level functions and dataclasses); workers are started with
    the "spawn" method.
    """

    def __init__(self, workers: int = 1, show_progress: bool = True, desc: str = "Processing"):
        """
        Initialize the executor.

        Args:
            workers: Number of processes; 1 runs in the calling process
            show_progress: Whether to draw a progress bar
            desc: Progress bar label
        """
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
        self.workers = workers
        self.show_progress = show_progress
        self.desc = desc

    def _progress(self, iterable, total: int):
        return tqdm(iterable, total=total, desc=self.desc, unit="img",
                    disable=not self.show_progress, leave=False)

    def map(self, func: Callable[[T], R], tasks: Sequence[T],
            initializer: Optional[Callable[[], None]] = None) -> List[R]:
        """
        Apply ``func`` to every task.

        Args:
            func: Picklable callable applied to one task
            tasks: Tasks in output order
            initializer: Optional per-process setup (run once per worker)

        Returns:
            List[R]: One result per task, in task order
        """
        if not tasks:
            return []

        workers = min(self.workers, len(tasks))
        if workers == 1:
            if initializer is not None:
                initializer()
            return [func(task) for task in self._progress(tasks, len(tasks))]

        logger.info("Starting worker pool", extra={'workers': workers, 'tasks': len(tasks)})
        ctx = mp.get_context("spawn")
        with ctx.Pool(processes=workers, initializer=initializer) as pool:
            return list(self._progress(pool.imap(func, tasks, chunksize=1), len(tasks)))
