"""Custom exceptions for the application."""
from typing import Any, Dict


class GleasonBijectionsException(Exception):
    """Base exception for gleason-bijections."""

    def __init__(self, message: str, details: Dict[str, Any] | None = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class ValidationException(GleasonBijectionsException):
    """Exception raised when input text does not parse as the requested type."""

    pass


class DomainException(GleasonBijectionsException):
    """Exception raised when a value lies outside an operation's domain."""

    pass


class FieldArithmeticException(GleasonBijectionsException):
    """Exception raised when polynomial or finite field arithmetic is impossible."""

    pass


class RootIsolationException(GleasonBijectionsException):
    """Exception raised when real roots cannot be certified."""

    pass


class ConsistencyException(GleasonBijectionsException):
    """Exception raised when two computations that must agree do not."""

    pass


class ConfigurationException(GleasonBijectionsException):
    """Exception raised when configuration is invalid."""

    pass
