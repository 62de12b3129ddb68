# File: TukeyDepthHub/depth_hub/middleware.py

import logging
import time

from django.utils.deprecation import MiddlewareMixin

logger = logging.getLogger(__name__)


class RequestLoggingMiddleware(MiddlewareMixin):
    """Middleware to log request details and performance"""

    def process_request(self, request):
        request._start_ns = time.perf_counter_ns()

    def process_response(self, request, response):
        if hasattr(request, '_start_ns'):
            duration_ms = (time.perf_counter_ns() - request._start_ns) / 1e6
            logger.info(
                f'{request.method} {request.path} - '
                f'{response.status_code} - {duration_ms:.1f}ms',
                extra={
                    'method': request.method,
                    'path': request.path,
                    'status': response.status_code,
                    'duration_ms': round(duration_ms, 3),
                },
            )
        return response
