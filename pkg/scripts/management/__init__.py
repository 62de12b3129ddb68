# File: scripts/management/__init__.py
# Management package initialization