"""
Unit tests for application exceptions.
"""

import pytest

from poisson_pencils.core.exceptions import (
    AppException,
    ConstructionError,
    IntegrityError,
    NotFoundError,
    ReductionError,
    ValidationError,
)


# Test exit codes
@pytest.mark.parametrize(
    "exception,exit_code",
    [
        (ValidationError, 2),
        (NotFoundError, 2),
        (ConstructionError, 2),
        (ReductionError, 1),
        (IntegrityError, 1),
    ],
)
def test_exit_codes(exception, exit_code):
    """Usage errors exit with 2, mathematical failures with 1."""
    assert exception.exit_code == exit_code


def test_exception_keeps_message_and_details():
    """AppException stores the message and details."""
    exc = ReductionError("singular", details={"det": "0"})

    assert isinstance(exc, AppException)
    assert exc.message == "singular"
    assert exc.details == {"det": "0"}
    assert str(exc) == "singular"


def test_default_message():
    """Exceptions fall back to their default message."""
    assert NotFoundError().message == "Resource not found"
