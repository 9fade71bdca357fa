"""In-process cache for polynomials indexed by period."""
import threading
from typing import Any, Callable, Dict, Hashable, Optional

from cachetools import LRUCache

from src.config import get_settings
from src.utils.logging import get_logger
from src.utils.metrics import gleason_cache_operations_total

logger = get_logger(__name__)


class PolynomialCache:
    """LRU cache shared by readers; values are computed outside the lock.

    When two callers miss on the same key concurrently both compute, and the
    first value stored is the one every caller receives.
    """

    def __init__(self, maxsize: int = 64):
        """Initialize polynomial cache.

        Args:
            maxsize: Maximum number of entries kept per cache
        """
        self._cache: LRUCache = LRUCache(maxsize=maxsize)
        self._lock = threading.Lock()
        self.stats = {"hits": 0, "misses": 0}
        logger.debug("polynomial_cache_initialized", maxsize=maxsize)

    def get(self, namespace: str, key: Hashable) -> Optional[Any]:
        with self._lock:
            value = self._cache.get((namespace, key))
            if value is None:
                self.stats["misses"] += 1
            else:
                self.stats["hits"] += 1
        status = "miss" if value is None else "hit"
        gleason_cache_operations_total.labels(operation="get", status=status).inc()
        return value

    def get_or_compute(self, namespace: str, key: Hashable, compute: Callable[[], Any]) -> Any:
        """Return the cached value, computing and storing it on a miss.

        Args:
            namespace: Polynomial family, e.g. "gleason"
            key: Usually the period n
            compute: Zero-argument function producing the value

        Returns:
            The cached or freshly computed value
        """
        value = self.get(namespace, key)
        if value is not None:
            return value
        value = compute()
        with self._lock:
            stored = self._cache.setdefault((namespace, key), value)
        gleason_cache_operations_total.labels(operation="set", status="success").inc()
        return stored

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()
            self.stats = {"hits": 0, "misses": 0}
        logger.debug("polynomial_cache_cleared")

    def get_stats(self) -> Dict[str, Any]:
        """Get cache statistics.

        Returns:
            Hit and miss counts, hit rate and current size
        """
        total = self.stats["hits"] + self.stats["misses"]
        return {
            **self.stats,
            "hit_rate": self.stats["hits"] / total if total else 0.0,
            "size": len(self._cache),
        }


_polynomial_cache: Optional[PolynomialCache] = None


def get_polynomial_cache() -> PolynomialCache:
    """Get the process-wide polynomial cache."""
    global _polynomial_cache
    if _polynomial_cache is None:
        _polynomial_cache = PolynomialCache(maxsize=get_settings().GLEASON_CACHE_SIZE)
    return _polynomial_cache

