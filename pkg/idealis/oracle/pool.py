"""Worker pools for partitioned oracle searches, shared per thread count."""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)


class WorkerPoolManager:
    """Keeps one executor alive per requested thread count."""

    def __init__(self):
        self._pools: dict[int, ThreadPoolExecutor] = {}
        self._lock = threading.Lock()

    def get_pool(self, threads: int) -> ThreadPoolExecutor:
        """Get or create the executor for this many workers."""
        if threads < 1:
            raise ValueError(f"thread count must be >= 1, got {threads}")
        with self._lock:
            if threads not in self._pools:
                self._pools[threads] = ThreadPoolExecutor(
                    max_workers=threads, thread_name_prefix=f"idealis-oracle-{threads}"
                )
                logger.debug(f"Worker pool started: {threads} threads")
            return self._pools[threads]

    @property
    def active(self) -> list[int]:
        return sorted(self._pools)

    def close_all(self):
        """Shut down every executor."""
        with self._lock:
            for pool in self._pools.values():
                pool.shutdown(wait=True)
            self._pools.clear()
            logger.debug("All worker pools closed")


# Global pool manager instance
_pool_manager: WorkerPoolManager | None = None


def get_pool_manager() -> WorkerPoolManager:
    """Get the global worker pool manager."""
    global _pool_manager
    if _pool_manager is None:
        _pool_manager = WorkerPoolManager()
    return _pool_manager


def shutdown_pool_manager():
    """Shutdown the global worker pool manager."""
    global _pool_manager
    if _pool_manager:
        _pool_manager.close_all()
        _pool_manager = None
