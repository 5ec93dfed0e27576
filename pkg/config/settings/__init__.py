"""
Settings package for partcx.

Selects the settings module from the DJANGO_ENV environment variable.
"""

import os

DJANGO_ENV = os.environ.get('DJANGO_ENV', 'development')

if DJANGO_ENV == 'test':
    from .test import *  # noqa: F401,F403
else:
    from .development import *  # noqa: F401,F403
