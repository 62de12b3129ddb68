# File: TukeyDepthHub/apps/depth/apps.py

from django.apps import AppConfig


class DepthConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.depth'
    verbose_name = 'Halfspace Depth'
