# File: TukeyDepthHub/apps/api/views.py

import logging

from rest_framework import status
from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from apps.depth.conf import get_setting
from apps.depth.exceptions import (
    DegenerateInputError,
    DepthError,
    DepthInputError,
    OracleBudgetError,
)
from apps.depth.runner import depth_records
from apps.depth.serializers import DepthRequestSerializer
from depth_hub.utils import cache_key_generator, get_or_create_cache, payload_digest

from .throttling import DepthRateThrottle

logger = logging.getLogger(__name__)

ERROR_STATUS = (
    (DepthInputError, status.HTTP_400_BAD_REQUEST),
    (DegenerateInputError, status.HTTP_422_UNPROCESSABLE_ENTITY),
    (OracleBudgetError, status.HTTP_413_REQUEST_ENTITY_TOO_LARGE),
)


def error_status(exc):
    for error_class, code in ERROR_STATUS:
        if isinstance(exc, error_class):
            return code
    return status.HTTP_500_INTERNAL_SERVER_ERROR


@api_view(['GET'])
@permission_classes([AllowAny])
def api_root(request, format=None):
    """
    API root endpoint with basic information
    """
    return Response({
        'message': 'Welcome to the TukeyDepthHub API',
        'version': '1.0',
        'endpoints': {
            'depth': '/api/v1/depth/',
            'health': '/health/',
        },
        'algorithms': ['rcom', 'adia', 'oracle', 'bivariate', 'random-upper'],
    })


class DepthAPIView(APIView):
    """
    Exact halfspace depth of query points.

    POST {data, queries, algorithm, tolerance, threads, trials, seed, force,
    strict}; returns one record per query. Identical payloads are answered
    from the cache without the elapsed time being recomputed.
    """
    permission_classes = [AllowAny]
    throttle_classes = [DepthRateThrottle]

    def post(self, request, format=None):
        serializer = DepthRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        config = serializer.to_config()
        payload = dict(serializer.validated_data)

        key = cache_key_generator('depth', payload_digest(payload))
        try:
            records, hit = get_or_create_cache(
                key,
                lambda: depth_records(payload['data'], payload['queries'], config),
                timeout=int(get_setting('CACHE_TIMEOUT')),
            )
        except DepthError as exc:
            code = error_status(exc)
            logger.warning(f'depth request rejected ({code}): {exc}')
            body = {'error': type(exc).__name__, 'detail': str(exc)}
            combination = getattr(exc, 'combination', None)
            if combination is not None:
                body['combination'] = list(combination)
            return Response(body, status=code)

        return Response({
            'algorithm': config.algorithm,
            'cached': hit,
            'count': len(records),
            'results': records,
        })
