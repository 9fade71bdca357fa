"""Tests for the polynomial cache."""
from src.core.cache.polynomial_cache import PolynomialCache, get_polynomial_cache


def test_miss_then_hit():
    """A stored value is returned on the next lookup."""
    cache = PolynomialCache(maxsize=4)
    assert cache.get("gleason", 3) is None
    assert cache.get_or_compute("gleason", 3, lambda: "c^3+2c^2+c+1") == "c^3+2c^2+c+1"
    assert cache.get("gleason", 3) == "c^3+2c^2+c+1"


def test_compute_runs_once_per_key():
    """The compute function is skipped once a value is cached."""
    cache = PolynomialCache(maxsize=4)
    calls = []

    def compute():
        calls.append(1)
        return 42

    cache.get_or_compute("q", 5, compute)
    cache.get_or_compute("q", 5, compute)
    assert len(calls) == 1


def test_namespaces_are_separate():
    """The same n under two namespaces holds two values."""
    cache = PolynomialCache(maxsize=4)
    cache.get_or_compute("q", 4, lambda: "q4")
    cache.get_or_compute("gleason", 4, lambda: "g4")
    assert cache.get("q", 4) == "q4"
    assert cache.get("gleason", 4) == "g4"


def test_first_stored_value_wins():
    """A value computed after another was stored is discarded."""
    cache = PolynomialCache(maxsize=4)
    cache.get_or_compute("q", 2, lambda: "first")
    # Simulates a racing caller that missed before the first store.
    with cache._lock:
        stored = cache._cache.setdefault(("q", 2), "second")
    assert stored == "first"


def test_lru_eviction():
    """The least recently used entry is evicted at capacity."""
    cache = PolynomialCache(maxsize=2)
    cache.get_or_compute("q", 1, lambda: 1)
    cache.get_or_compute("q", 2, lambda: 2)
    cache.get("q", 1)
    cache.get_or_compute("q", 3, lambda: 3)
    assert cache.get("q", 2) is None
    assert cache.get("q", 1) == 1


def test_stats_and_clear():
    """Hits, misses and size are reported and reset by clear."""
    cache = PolynomialCache(maxsize=4)
    cache.get_or_compute("q", 1, lambda: 1)
    cache.get("q", 1)
    stats = cache.get_stats()
    assert stats["hits"] == 1
    assert stats["misses"] == 1
    assert stats["hit_rate"] == 0.5
    assert stats["size"] == 1

    cache.clear()
    assert cache.get_stats() == {"hits": 0, "misses": 0, "hit_rate": 0.0, "size": 0}


def test_global_cache_is_shared():
    """get_polynomial_cache returns one instance per process."""
    assert get_polynomial_cache() is get_polynomial_cache()
