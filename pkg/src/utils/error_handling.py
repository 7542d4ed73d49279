"""
Error handling utilities for the Hopf image toolkit.
"""

import logging
import sys
import traceback
from typing import Callable, Any

from config import EXIT_INPUT_ERROR


logger = logging.getLogger(__name__)


class HopfImageError(Exception):
    """Base exception for toolkit errors."""
    pass


class ConfigurationException(HopfImageError):
    """Exception for malformed configuration or input documents."""
    pass


class DivisionByZero(HopfImageError, ZeroDivisionError):
    """Division by the zero element of the base field."""
    pass


class ContextMismatch(HopfImageError):
    """Operands live in cyclotomic fields of different conductors."""
    pass


class ParseError(HopfImageError):
    """Syntax error in a scalar expression."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DimensionMismatch(HopfImageError):
    """Subspaces or matrices with incompatible dimensions."""
    pass


class ShapeMismatch(DimensionMismatch):
    """Maps whose shapes cannot be composed."""
    pass


class SingularSystem(HopfImageError):
    """A linear system has no solution."""
    pass


class NotAHopfIdeal(HopfImageError):
    """A quotient was requested by a subspace that is not a Hopf ideal."""
    pass


class InvalidRepresentation(HopfImageError):
    """A matrix does not define a unital algebra morphism."""
    pass


class ClosureInvariantError(HopfImageError):
    """The computed closure violates one of its postconditions."""
    pass


class NotClosed(HopfImageError):
    """A set of group-like elements is not closed under multiplication."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotGroupLike(HopfImageError):
    """A vector expected to be group-like is not."""
    pass


class NotATwist(HopfImageError):
    """An element of H tensor H is neither a twist nor a pseudo-twist."""
    pass


class NotACocycle(HopfImageError):
    """A bilinear form fails the 2-cocycle conditions."""
    pass


class NotSurjective(HopfImageError):
    """A Hopf algebra map expected to be onto is not."""
    pass


class HostMismatch(HopfImageError):
    """Comodules over different Hopf algebras."""
    pass


class InvalidTable(HopfImageError):
    """A multiplication table does not define a group."""
    pass


class IndexOutOfRange(HopfImageError):
    """A group element index is outside the table."""
    pass


class MissingCharacterTable(HopfImageError):
    """No character table is available for the group."""
    pass


class WrongOrder(HopfImageError):
    """A root of unity has the wrong multiplicative order."""
    pass


class OrderMismatch(HopfImageError):
    """Generator images do not satisfy the defining relations of a quotient."""
    pass


class NotAnNthRoot(HopfImageError):
    """A scalar is not an n-th root of unity."""
    pass


def handle_exception(exc_type, exc_value, exc_traceback):
    """Global exception handler for unhandled exceptions."""
    if issubclass(exc_type, KeyboardInterrupt):
        sys.__excepthook__(exc_type, exc_value, exc_traceback)
        return

    logger.critical(
        "Uncaught exception",
        exc_info=(exc_type, exc_value, exc_traceback)
    )


def safe_execute(func: Callable, *args, **kwargs) -> tuple[bool, Any]:
    """
    Safely execute a function and return success status and result.

    Args:
        func: Function to execute
        *args: Positional arguments for the function
        **kwargs: Keyword arguments for the function

    Returns:
        tuple: (success: bool, result: Any)
    """
    try:
        result = func(*args, **kwargs)
        return True, result
    except HopfImageError as e:
        logger.warning(f"{func.__name__} did not complete: {e}")
        logger.debug(traceback.format_exc())
        return False, None


def validate_config(config_dict: dict, required_keys: list) -> bool:
    """
    Validate that a configuration dictionary contains required keys.

    Args:
        config_dict: Configuration dictionary to validate
        required_keys: List of required keys

    Returns:
        True if all required keys are present

    Raises:
        ConfigurationException: If required keys are missing
    """
    if not isinstance(config_dict, dict):
        raise ConfigurationException(f"Expected a JSON object, got {type(config_dict).__name__}")
    missing_keys = [key for key in required_keys if key not in config_dict]
    if missing_keys:
        raise ConfigurationException(f"Missing required keys: {missing_keys}")
    return True


class ErrorHandler:
    """Centralized error handling for the command line front end."""

    def __init__(self, exit_code: int = EXIT_INPUT_ERROR):
        """
        Initialize the error handler.

        Args:
            exit_code: Process exit code reported for a handled error
        """
        self.exit_code = exit_code

    def handle_error(self, error: Exception, context: str = "") -> int:
        """
        Log an error and return the exit code for it.

        Args:
            error: The exception that occurred
            context: Additional context about where the error occurred

        Returns:
            The exit code the command line should finish with
        """
        if context:
            logger.error(f"{context}: {error}")
        else:
            logger.error(f"Error: {error}")

        logger.debug(traceback.format_exc())
        return self.exit_code


def setup_global_exception_handler():
    """Set up the global exception handler."""
    sys.excepthook = handle_exception
