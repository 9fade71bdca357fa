"""Table and verification services."""
