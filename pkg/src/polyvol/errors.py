"""Exception hierarchy shared by all polyvol modules."""


class PolyvolError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(PolyvolError, ValueError):
    """An argument is outside its documented domain."""


class SizeError(ParameterError):
    """The input is structurally valid but too large for the method."""


class MethodNotApplicable(PolyvolError):
    """The requested method does not cover this input (e.g. perm on a
    non-bipartite graph)."""


class DSLError(ParameterError):
    """Graph DSL or edge-list file could not be parsed.

    Carries a 1-based position so the CLI can point at the offending
    character (column for DSL strings, line/column for files).
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None and column is not None:
            where = f" (line {line}, column {column})"
        elif column is not None:
            where = f" (column {column})"
        super().__init__(message + where)
