"""Prometheus metrics for monitoring."""
from prometheus_client import Counter, Histogram

# Verification metrics
verification_checks_total = Counter(
    "verification_checks_total",
    "Total number of verification checks",
    ["suite", "status"],
)

verification_cell_duration_seconds = Histogram(
    "verification_cell_duration_seconds",
    "Duration of one (suite, n) verification cell in seconds",
    ["suite"],
    buckets=(0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 15.0, 60.0, 300.0),
)

# Cache metrics
gleason_cache_operations_total = Counter(
    "gleason_cache_operations_total",
    "Total polynomial cache operations",
    ["operation", "status"],
)

# Algebra metrics
root_isolation_duration_seconds = Histogram(
    "root_isolation_duration_seconds",
    "Duration of real root isolation for one Gleason polynomial",
    buckets=(0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 15.0, 60.0, 300.0),
)

factorization_duration_seconds = Histogram(
    "factorization_duration_seconds",
    "Duration of one factorization over GF(2)",
    buckets=(0.001, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 30.0),
)

# Error metrics
errors_total = Counter(
    "errors_total",
    "Total number of errors",
    ["error_type", "component"],
)
