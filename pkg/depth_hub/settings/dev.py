# File: TukeyDepthHub/depth_hub/settings/dev.py

from .base import *  # noqa: F401, F403

# Debug settings
DEBUG = True
ALLOWED_HOSTS = ['localhost', '127.0.0.1', '0.0.0.0']

# Cache configuration for development
CACHES = {
    'default': {
        'BACKEND': 'django_redis.cache.RedisCache',
        'LOCATION': config('REDIS_URL', default='redis://localhost:6379/1'),
        'OPTIONS': {
            'CLIENT_CLASS': 'django_redis.client.DefaultClient',
            'IGNORE_EXCEPTIONS': True,
        },
        'KEY_PREFIX': 'depthhub_dev',
        'TIMEOUT': 300,
    }
}

# Descent checks are cheap next to the searches themselves
DEPTH['CHECK_DESCENT'] = config('DEPTH_CHECK_DESCENT', default=True, cast=bool)

LOGGING['loggers']['apps']['level'] = 'DEBUG'

# Larger payloads for local experiments
DATA_UPLOAD_MAX_MEMORY_SIZE = 104857600  # 100MB for development
