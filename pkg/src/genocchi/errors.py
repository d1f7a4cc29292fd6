"""Exception types shared across the package.

Precondition violations (bad arguments) raise plain ValueError; the classes
here mark conditions that indicate either a broken mathematical identity or
a refused computation.
"""


class InexactDivisionError(ArithmeticError):
    """An exact polynomial division left a nonzero remainder.

    Every division performed by this package is backed by an identity that
    guarantees exactness, so this exception signals a broken identity and
    must never be silenced.
    """


class InternalInconsistencyError(RuntimeError):
    """A computed value contradicts a theorem the package relies on."""


class ResourceLimitError(RuntimeError):
    """The requested index exceeds the configured enumeration bound."""
