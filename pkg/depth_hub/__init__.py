# File: TukeyDepthHub/depth_hub/__init__.py
