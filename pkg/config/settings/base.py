"""
Base settings for the partcx project.
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

SECRET_KEY = config('SECRET_KEY', default='partcx-insecure-local-key')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition
DJANGO_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
]

THIRD_PARTY_APPS = [
    'rest_framework',
]

LOCAL_APPS = [
    'apps.core',
    'apps.simplicial',
    'apps.posets',
    'apps.partitions',
    'apps.trees',
    'apps.comparison',
    'apps.operads',
    'apps.campaigns',
]

INSTALLED_APPS = DJANGO_APPS + THIRD_PARTY_APPS + LOCAL_APPS

# Database (campaign records only)
DATABASES = {
    'default': {
        'ENGINE': config('DB_ENGINE', default='django.db.backends.sqlite3'),
        'NAME': config('DB_NAME', default=str(BASE_DIR / 'partcx.sqlite3')),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

USE_TZ = config('USE_TZ', default=True, cast=bool)
TIME_ZONE = config('TIME_ZONE', default='UTC')

# Computation bounds and campaign defaults
PARTCX = {
    'MAX_LEAVES': config('PARTCX_MAX_LEAVES', default=8, cast=int),
    'MAX_TREE_LEAVES': config('PARTCX_MAX_TREE_LEAVES', default=7, cast=int),
    'MAX_THEOREM_LEAVES': config('PARTCX_MAX_THEOREM_LEAVES', default=6, cast=int),
    'MAX_LABELLED_LEAVES': config('PARTCX_MAX_LABELLED_LEAVES', default=4, cast=int),
    'MAX_BAR_LEAVES': config('PARTCX_MAX_BAR_LEAVES', default=5, cast=int),
    'OPERAD_MAX_ARITY': config('PARTCX_OPERAD_MAX_ARITY', default=4, cast=int),
    # 0 means every nonempty subset of leaf vertices
    'MAX_CONE_SUBSET': config('PARTCX_MAX_CONE_SUBSET', default=0, cast=int),
    'JOBS': config('PARTCX_JOBS', default=1, cast=int),
    'RING': config('PARTCX_RING', default='z'),
    'CAMPAIGN_BACKEND': config('PARTCX_CAMPAIGN_BACKEND', default='local'),
}

# REST Framework (serializers only, no HTTP surface)
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'COERCE_DECIMAL_TO_STRING': False,
}

# Redis / Celery Configuration
REDIS_HOST = config('REDIS_HOST', default='localhost')
REDIS_PORT = config('REDIS_PORT', default=6379, cast=int)
REDIS_DB = config('REDIS_DB', default=0, cast=int)

CELERY_BROKER_URL = config('CELERY_BROKER_URL', default=f'redis://{REDIS_HOST}:{REDIS_PORT}/{REDIS_DB}')
CELERY_RESULT_BACKEND = config('CELERY_RESULT_BACKEND', default=f'redis://{REDIS_HOST}:{REDIS_PORT}/{REDIS_DB}')
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = TIME_ZONE

# Logging Configuration
LOG_FILE = config('LOG_FILE', default='')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {process:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'INFO',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'partcx': {
            'handlers': ['console'],
            'level': config('PARTCX_LOG_LEVEL', default='INFO'),
            'propagate': False,
        },
    },
}

if LOG_FILE:
    LOGGING['handlers']['file'] = {
        'level': 'INFO',
        'class': 'logging.FileHandler',
        'filename': LOG_FILE,
        'formatter': 'verbose',
    }
    LOGGING['root']['handlers'].append('file')
    LOGGING['loggers']['partcx']['handlers'].append('file')
