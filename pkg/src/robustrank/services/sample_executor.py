"""
A thread pool for running independent chunks of Monte Carlo draws.
"""

import logging
from concurrent.futures import Future, ThreadPoolExecutor
from types import TracebackType
from typing import Callable, List, Optional, Sequence, Type, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class SampleExecutor:
    """
    Runs a function over a sequence of work items on a pool of worker threads
    and hands the results back in submission order, whatever the order in
    which the workers finish them.
    """

    def __init__(self, workers: int = 1) -> None:
        """
        Initializes the executor.

        Args:
            workers (int): Number of worker threads. With a single worker the
                items run inline on the calling thread.
        """
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}.")
        self.workers = workers
        self._pool: Optional[ThreadPoolExecutor] = None
        if workers > 1:
            self._pool = ThreadPoolExecutor(
                max_workers=workers, thread_name_prefix="robustrank-smaa"
            )
            logger.debug(f"SampleExecutor started {workers} worker threads.")

    def map(self, task: Callable[[T], R], items: Sequence[T]) -> List[R]:
        """
        Applies ``task`` to every item.

        Args:
            task (Callable[[T], R]): The function to execute per item.
            items (Sequence[T]): Work items.

        Returns:
            List[R]: One result per item, in the order of ``items``.

        Raises:
            Exception: The first error raised by a task, in item order.
        """
        if self._pool is None:
            return [task(item) for item in items]

        futures: List[Future[R]] = [self._pool.submit(task, item) for item in items]
        results: List[R] = []
        for index, future in enumerate(futures):
            try:
                results.append(future.result())
            except Exception as e:
                logger.error(f"Work item {index} failed: {e}", exc_info=True)
                for pending in futures[index + 1 :]:
                    pending.cancel()
                raise
        return results

    def stop(self) -> None:
        """Shuts the worker threads down, waiting for running items."""
        if self._pool is not None:
            logger.debug("Stopping SampleExecutor worker threads...")
            self._pool.shutdown(wait=True)
            self._pool = None

    def __enter__(self) -> "SampleExecutor":
        return self

    def __exit__(
        self,
        exc_type: Optional[Type[BaseException]],
        exc: Optional[BaseException],
        tb: Optional[TracebackType],
    ) -> None:
        self.stop()
