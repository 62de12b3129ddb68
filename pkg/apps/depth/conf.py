# File: TukeyDepthHub/apps/depth/conf.py

from django.conf import settings

DEFAULTS = {
    'TOLERANCE': 1e-9,
    'THREADS': 1,
    'ORACLE_MAX_WORK': 10**9,
    'RANDOM_TRIALS': 10000,
    'CHECK_DESCENT': False,
    'BENCH_BUDGET': 60.0,
    'CACHE_TIMEOUT': 900,
}


def get_setting(name):
    """
    Read a depth setting from settings.DEPTH, falling back to DEFAULTS.
    """
    overrides = getattr(settings, 'DEPTH', {}) if settings.configured else {}
    if name in overrides:
        return overrides[name]
    return DEFAULTS[name]
