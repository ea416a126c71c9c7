import os

from .production import *  # noqa: F401, F403
from .production import LOGGING

ALLOWED_HOSTS = os.environ.get("ALLOWED_HOSTS", "*").split(",")

ENVIRONMENT = "test"

SECRET_KEY = "abc123"

DEBUG = True

LOGGING["loggers"]["app"]["level"] = "WARNING"
