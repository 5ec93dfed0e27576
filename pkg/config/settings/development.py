"""
Development settings for the partcx project.
"""

from .base import *  # noqa: F401,F403

DEBUG = config('DEBUG', default=True, cast=bool)

# Logging - more verbose for development
LOGGING['loggers']['partcx']['level'] = config('PARTCX_LOG_LEVEL', default='DEBUG')
