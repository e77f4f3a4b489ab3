"""Exception hierarchy shared across the package.

Everything raised on purpose derives from GridBenchError so the CLI can
map domain failures to exit code 1 without catching stray bugs.
"""


class GridBenchError(Exception):
    """Base class for all expected failures."""


class InvalidCellError(GridBenchError):
    """A coordinate violates the grid contract (out of bounds, blocked, ...)."""


class AdjacencyError(GridBenchError):
    """Two cells passed to a step-cost query are not 8-neighbors."""


class GridFormatError(GridBenchError):
    """Malformed grid text, or a grid that the text format cannot express."""


class NoPathError(GridBenchError):
    """The goal is unreachable from the start."""


class InvalidSpecError(GridBenchError):
    """A generator spec violates its invariants."""


class GenerationError(GridBenchError):
    """The rejection sampler could not produce a solvable grid."""


class ConfigError(GridBenchError):
    """Bad key, value, or syntax in a run-plan config file."""


class InvalidPriorityError(GridBenchError):
    """Unrecognized selection priority."""


class MeasurementError(GridBenchError):
    """Timer or probe failure inside the metrics harness."""
