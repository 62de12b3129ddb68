# File: scripts/__init__.py
# Scripts package initialization