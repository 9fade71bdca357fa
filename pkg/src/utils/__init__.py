"""Logging, metrics and exceptions."""
