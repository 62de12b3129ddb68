# File: TukeyDepthHub/apps/depth/exceptions.py
"""
Exception hierarchy for the depth computations.

Management commands map these classes onto exit codes and the API maps them
onto HTTP statuses, so every error raised by the library derives from
DepthError.
"""


class DepthError(Exception):
    """Base class for all depth computation errors."""

    exit_code = 1


class DepthInputError(DepthError):
    """Malformed input: non-finite values, bad shapes or unparsable files."""

    exit_code = 2

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)


class DegenerateInputError(DepthError):
    """Input that admits no meaningful depth computation."""

    exit_code = 3


class AllPointsCoincideError(DegenerateInputError):
    """Every observation equals the query point; the depth is n/n."""

    def __init__(self, n):
        self.n = n
        super().__init__(f'all {n} observations coincide with the query point')


class GeneralPositionError(DegenerateInputError):
    """Points lie on a common hyperplane through the query point."""

    def __init__(self, combination, message=None):
        self.combination = tuple(int(i) for i in combination)
        if message is None:
            message = 'general position violated'
        super().__init__(f'{message} (combination {list(self.combination)})')


class OracleBudgetError(DepthError):
    """The exhaustive oracle refused an input above its work guard."""

    exit_code = 4

    def __init__(self, work, limit):
        self.work = work
        self.limit = limit
        super().__init__(
            f'oracle work {work} exceeds the limit {limit}; pass force to run anyway'
        )


class DescentViolationError(DepthError):
    """A witness-completed child had a larger subspace depth than its parent."""

    def __init__(self, parent, child, parent_value, child_value):
        self.parent = parent
        self.child = child
        super().__init__(
            f'descent violated: child {list(child)} has {child_value} '
            f'> parent {list(parent)} with {parent_value}'
        )
