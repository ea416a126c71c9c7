import os

from config.util import strtobool

from .production import *  # noqa: F403
from .production import LOGGING

ALLOWED_HOSTS = os.environ.get("ALLOWED_HOSTS", "*").split(",")

SECRET_KEY = os.environ.get("SECRET_KEY", "develop")

DEBUG = strtobool(os.getenv("DEBUG", "False"))

# Per-item detail (cells, margins, audited directions) while developing
LOGGING["handlers"]["console"]["level"] = "DEBUG"
LOGGING["loggers"]["app"]["level"] = "DEBUG"
