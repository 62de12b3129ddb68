# File: TukeyDepthHub/depth_hub/settings/__init__.py
