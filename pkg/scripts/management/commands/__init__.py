# File: scripts/management/commands/__init__.py
# Commands package initialization