"""Command-line rendering helpers."""
