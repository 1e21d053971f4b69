"""Exception hierarchy shared by every module."""


class ScemkitError(Exception):
    """Base class for all errors raised by scemkit."""


class NotSingularlyPerturbedError(ScemkitError, ValueError):
    """The second-derivative coefficient vanishes."""


class InteriorLayerError(ScemkitError):
    """The convection coefficient changes sign or vanishes on the interval."""


class ClosedFormUnavailableError(ScemkitError):
    """The coefficient class falls outside what the closed-form solvers handle."""


class NonFiniteError(ScemkitError, ArithmeticError):
    """An approximation produced NaN or infinity at a grid point."""

    def __init__(self, message, x=None):
        super().__init__(message)
        self.x = x


class ConfigError(ScemkitError, ValueError):
    """Malformed problem file."""

    def __init__(self, message, line=None, key=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key '{key}'")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.line = line
        self.key = key


class RowError(ScemkitError):
    """A benchmark table row failed; carries the row's epsilon."""

    def __init__(self, epsilon, cause):
        super().__init__(f"epsilon={epsilon!r}: {cause}")
        self.epsilon = epsilon
        self.cause = cause
