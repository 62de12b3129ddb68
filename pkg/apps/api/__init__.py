# File: TukeyDepthHub/apps/api/__init__.py

default_app_config = 'apps.api.apps.ApiConfig'
