"""
Test settings for the partcx project.
"""

from .base import *  # noqa: F401,F403

# Use in-memory SQLite database for testing
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    }
}

DEBUG = False

# Disable logging during tests
LOGGING = {
    'version': 1,
    'disable_existing_loggers': True,
}

# Run Celery tasks inline
CELERY_TASK_ALWAYS_EAGER = True
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_BROKER_URL = 'memory://'
CELERY_RESULT_BACKEND = 'cache+memory://'

# Deterministic defaults regardless of the developer's environment
PARTCX = dict(PARTCX)
PARTCX.update({'JOBS': 1, 'RING': 'z', 'CAMPAIGN_BACKEND': 'local', 'MAX_CONE_SUBSET': 0})

TEST_RUNNER = 'django.test.runner.DiscoverRunner'


# Disable migrations during tests
class DisableMigrations:
    def __contains__(self, item):
        return True

    def __getitem__(self, item):
        return None


MIGRATION_MODULES = DisableMigrations()
