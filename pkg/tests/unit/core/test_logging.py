"""
Unit tests for the library logger and the AppObject base.
"""

from logging import NullHandler

from poisson_pencils.core.base import AppObject
from poisson_pencils.core.config import settings
from poisson_pencils.core.logging import get_logger, logger
from poisson_pencils.services.render import ReportRenderer
from poisson_pencils.services.suites import VerificationService


# Test get_logger
def test_module_loggers_are_library_children():
    """Module loggers hang below the library logger."""
    assert get_logger("algebra").name == f"{settings.app.name}.algebra"


def test_library_logger_is_silent_by_default():
    """Without a configured handler the library emits nothing."""
    assert any(isinstance(handler, NullHandler) for handler in logger.handlers)


# Test AppObject
def test_subclasses_get_a_class_logger():
    """Each AppObject subclass logs under its own name."""

    class Worker(AppObject):
        pass

    assert Worker.logger.name.startswith(settings.app.name + ".")
    assert Worker.logger.name.endswith(".Worker")


def test_services_use_distinct_loggers():
    """The renderer and the verification service do not share a logger."""
    assert ReportRenderer.logger is not VerificationService.logger
    assert ReportRenderer.logger.name.endswith("ReportRenderer")
