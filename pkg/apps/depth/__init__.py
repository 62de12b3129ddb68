# File: TukeyDepthHub/apps/depth/__init__.py

default_app_config = 'apps.depth.apps.DepthConfig'
