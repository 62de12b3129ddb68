# File: TukeyDepthHub/depth_hub/utils.py

import hashlib
import json

from django.core.cache import cache


def cache_key_generator(*args, **kwargs):
    """
    Generate a cache key from arguments.
    """
    key_parts = [str(arg) for arg in args]
    key_parts.extend([f"{k}:{v}" for k, v in sorted(kwargs.items())])
    key_string = ':'.join(key_parts)

    # Hash the key if it's too long
    if len(key_string) > 200:
        return hashlib.md5(key_string.encode()).hexdigest()

    return key_string


def payload_digest(payload):
    """Stable digest of a JSON-serializable payload."""
    text = json.dumps(payload, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(text.encode()).hexdigest()


def get_or_create_cache(key, callable_func, timeout=300):
    """
    Get value from cache or create it using the callable.

    Returns (value, hit).
    """
    value = cache.get(key)
    if value is not None:
        return value, True
    value = callable_func()
    cache.set(key, value, timeout)
    return value, False
