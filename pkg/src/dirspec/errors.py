"""Exception types shared across the package."""


class DirspecError(Exception):
    """Base class for all errors raised by this package."""


class DataError(DirspecError):
    """Bad input data: unreadable files, malformed lines, empty or invalid graphs."""


class NumericalError(DirspecError):
    """Numerical failure: non-convergence, unexpected spectra, root bracketing."""
