# File: TukeyDepthHub/apps/api/urls.py

from django.urls import path

from . import views

app_name = 'api'

urlpatterns = [
    # API root
    path('', views.api_root, name='api_root'),

    # Depth computation
    path('depth/', views.DepthAPIView.as_view(), name='depth'),
]
