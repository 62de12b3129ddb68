# File: TukeyDepthHub/apps/__init__.py
