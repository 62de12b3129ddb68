# File: TukeyDepthHub/depth_hub/urls.py

from django.http import JsonResponse
from django.urls import include, path


def health_check(request):
    """Simple health check endpoint"""
    return JsonResponse({'status': 'ok', 'message': 'TukeyDepthHub is running'})


urlpatterns = [
    # Health check
    path('health/', health_check, name='health_check'),

    # API URLs
    path('api/v1/', include('apps.api.urls')),
]
