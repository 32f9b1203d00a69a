"""Domain errors raised by the graph and equivalence machinery."""


class GraphError(ValueError):
    """Base class for all domain errors (invalid graphs, families, files)."""


class FormatError(GraphError):
    """Malformed graph or target-family text file."""


class CoveringError(GraphError):
    """Target family violates the covering property."""


class NotChordalError(GraphError):
    """A chain component is not chordal; the graph is not a valid essential graph."""


class NotInClassError(GraphError):
    """A DAG is not a member of the given equivalence class."""
