# File: TukeyDepthHub/apps/depth/dataio.py
"""
CSV ingestion and record output.

Data files are comma-separated numeric rows, UTF-8, LF line endings. A first
row that does not parse as numbers is taken as a header and skipped.
"""

import csv
import io
import json
import logging
from pathlib import Path

import numpy as np

from .exceptions import DepthInputError

logger = logging.getLogger(__name__)

RECORD_FIELDS = [
    'query_index',
    'algorithm',
    'numerator',
    'n',
    'fraction',
    'depth',
    'witness_combination',
    'witness_direction',
    'elapsed_ns',
]


def _parse_row(row, line):
    try:
        return [float(cell) for cell in row]
    except ValueError as exc:
        raise DepthInputError(f'non-numeric value ({exc})', line=line) from None


def parse_matrix(text, name='data'):
    """Parse CSV text into an n x p float matrix."""
    rows = []
    width = None
    first = True
    for line, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        cells = [cell.strip() for cell in row]
        if not any(cells):
            continue
        if first:
            first = False
            try:
                values = [float(cell) for cell in cells]
            except ValueError:
                logger.debug(f'{name}: header on line {line} skipped')
                continue
        else:
            values = _parse_row(cells, line)
        if width is None:
            width = len(values)
        if len(values) != width:
            raise DepthInputError(f'expected {width} columns, found {len(values)}', line=line)
        if not np.all(np.isfinite(values)):
            raise DepthInputError('non-finite value', line=line)
        rows.append(values)
    if not rows:
        raise DepthInputError(f'{name} contains no numeric rows')
    return np.array(rows, dtype=float)


def read_matrix(path, name=None):
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise DepthInputError(f'cannot read {path}: {exc.strerror}') from exc
    return parse_matrix(text, name or path.name)


def format_matrix(array):
    lines = [','.join(f'{value:.17g}' for value in row) for row in np.asarray(array)]
    return '\n'.join(lines) + '\n'


def write_matrix(path, array):
    Path(path).write_text(format_matrix(array), encoding='utf-8', newline='\n')


def _csv_cell(value):
    if value is None:
        return ''
    if isinstance(value, (list, tuple)):
        return ' '.join(str(v) for v in value)
    return value


def dump_records(records, fmt='json'):
    """Serialize result records as a JSON array or a CSV table."""
    if fmt == 'json':
        return json.dumps(records, indent=2) + '\n'
    if fmt == 'csv':
        buffer = io.StringIO(newline='')
        writer = csv.DictWriter(buffer, fieldnames=RECORD_FIELDS, lineterminator='\n')
        writer.writeheader()
        for record in records:
            writer.writerow({key: _csv_cell(record.get(key)) for key in RECORD_FIELDS})
        return buffer.getvalue()
    raise DepthInputError(f'unknown output format {fmt!r}')


def dump_table(rows, fields):
    buffer = io.StringIO(newline='')
    writer = csv.DictWriter(buffer, fieldnames=fields, lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _csv_cell(row.get(key)) for key in fields})
    return buffer.getvalue()
