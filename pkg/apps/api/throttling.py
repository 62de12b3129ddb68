# File: TukeyDepthHub/apps/api/throttling.py

from rest_framework.throttling import AnonRateThrottle


class DepthRateThrottle(AnonRateThrottle):
    """Rate throttle for depth computations, keyed by client address"""
    scope = 'depth'

    def get_cache_key(self, request, view):
        if request.method != 'POST':
            return None

        return self.cache_format % {
            'scope': self.scope,
            'ident': self.get_ident(request)
        }
