"""Exception taxonomy shared by the library and the command line tool."""


class InputError(ValueError):
    """Raised when an argument is malformed or outside an operation's domain."""


class ComputationError(RuntimeError):
    """Raised when a computation cannot be completed at the requested accuracy."""


class ResolutionError(ComputationError):
    """Raised when grid refinement hits its cap before winding steps resolve."""
