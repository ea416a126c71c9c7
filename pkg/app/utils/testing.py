import contextlib
import logging

from django.test import SimpleTestCase

from factory.random import reseed_random

FACTORY_SEED = "zonelab"


@contextlib.contextmanager
def ignore_warnings(logger_name: str = "app"):
    """
    Silences warnings from a logger, e.g. the audit's inconsistent-direction
    warnings in tests that expect a failing audit
    """

    logger = logging.getLogger(logger_name)
    original_level = logger.getEffectiveLevel()
    logger.setLevel(logging.ERROR)

    try:
        yield
    finally:
        logger.setLevel(original_level)


class ReseedFactoryRandomMixin(SimpleTestCase):
    """
    Mixin to reseed factory-boy's random generator, so randomised forms are
    the same on every run
    """

    def setUp(self):
        super().setUp()
        reseed_random(FACTORY_SEED)
