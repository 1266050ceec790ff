from decouple import config

DEBUG = config('DEBUG', default=False, cast=bool)

SECRET_KEY = config('SECRET_KEY', default='string_from_.env')

# Seed of the random corpora when a command gets no --seed
GAUGEQC_SEED = config('GAUGEQC_SEED', default=20240101, cast=int)

LOG_LEVEL = config('LOG_LEVEL', default='WARNING')

INSTALLED_APPS = [
    'rest_framework',
    'api.apps.ApiConfig',
]

# Nothing is persisted
DATABASES = {}

REST_FRAMEWORK = {
    'COMPACT_JSON': True,
    'STRICT_JSON': True,
    'UNAUTHENTICATED_USER': None,
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': LOG_LEVEL,
    },
}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True
