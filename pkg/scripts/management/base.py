"""
File: scripts/management/base.py
Shared plumbing for the depth management commands: error translation to exit
codes and output routing.
"""

import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from apps.depth.exceptions import DepthError

logger = logging.getLogger(__name__)

INPUT_EXIT_CODE = 2


class DepthCommand(BaseCommand):
    """BaseCommand that turns DepthError subclasses into CommandError exit codes"""

    def fail(self, exc):
        if isinstance(exc, DepthError):
            logger.error(f'{type(exc).__name__}: {exc}')
            return CommandError(str(exc), returncode=exc.exit_code)
        return CommandError(str(exc), returncode=INPUT_EXIT_CODE)

    def invalid(self, errors):
        """CommandError for serializer validation errors"""
        parts = []
        for field, messages in errors.items():
            text = ' '.join(str(message) for message in messages)
            parts.append(f'{field}: {text}')
        return CommandError('; '.join(parts), returncode=INPUT_EXIT_CODE)

    def emit(self, text, out=None):
        if out:
            Path(out).write_text(text, encoding='utf-8', newline='\n')
            self.stderr.write(self.style.SUCCESS(f'Wrote {out}'))
        else:
            self.stdout.write(text, ending='')
